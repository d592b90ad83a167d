/*
  Copyright (c) 2026 The qdc authors

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

#include "rmatrix/rmatrix.hpp"

#include <map>

#include "calculus/calculus.hpp"
#include "ring/errors.hpp"

namespace qdc {

SuperMatrix r_hat(const LaurentScalar& q) {
  LaurentScalar z, one(1), qi = q.inverse();
  return SuperMatrix::constant({{q, z, z, z}, {z, q - qi, one, z}, {z, one, z, z}, {z, z, z, -qi}}, {0, 1, 1, 0});
}

SuperMatrix r_hat_inverse(const LaurentScalar& q) {
  return r_hat(q) - SuperMatrix::identity({0, 1, 1, 0}).scaled(q - q.inverse());
}

const std::vector<std::string>& rtt_family_names() {
  static const std::vector<std::string> names{"glq11", "mixed", "hat", "forms.T", "forms"};
  return names;
}

SuperMatrix rtt_matrix(const std::string& family, const RttInputs& in) {
  const SuperMatrix id = SuperMatrix::identity(plane_parity());
  const SuperMatrix r = r_hat(in.q);
  if (family == "glq11") {
    SuperMatrix t1 = graded_kron(in.t, id), t2 = graded_kron(id, in.t);
    return r * t1 * t2 - t1 * t2 * r;
  }
  if (family == "mixed") {
    SuperMatrix t1 = graded_kron(in.t, id), t2 = graded_kron(id, in.t);
    SuperMatrix h1 = graded_kron(in.t_hat, id), h2 = graded_kron(id, in.t_hat);
    return t1.parity_signed(0) * h2 - r * h1 * t2 * r;
  }
  if (family == "hat") {
    SuperMatrix h1 = graded_kron(in.t_hat, id), h2 = graded_kron(id, in.t_hat);
    // d of the sign-twisted T1 carries the T-entry sign; the right side the dT-entry sign.
    return h1.parity_signed(0) * h2 - r * h1.parity_signed(1) * h2 * r;
  }
  if (family == "forms.T") {
    SuperMatrix t1 = graded_kron(in.t, id);
    SuperMatrix w1 = graded_kron(in.w, id), w2 = graded_kron(id, in.w);
    return t1.parity_signed(0) * w2 - r * w1 * r * t1;
  }
  if (family == "forms") {
    SuperMatrix w1 = graded_kron(in.w, id);
    SuperMatrix sw1 = w1.parity_signed(1);
    return sw1 * r * w1 * r_hat_inverse(in.q) + r * sw1 * r * w1;
  }
  throw UnknownNameError("unknown R-matrix family '" + family + "'");
}

namespace {

const std::vector<std::string> kT{"a", "beta", "gamma", "d"};
const std::vector<std::string> kTHat{"Da", "Dbeta", "Dgamma", "Dd"};
const std::vector<std::string> kW{"w1", "u", "v", "w2"};

Resolver generator_resolver(const Pres* p, const LaurentScalar& q) {
  Resolver r;
  r.name = [p](const std::string& n) -> std::optional<Elem> {
    auto g = p->find(n);
    if (!g) return std::nullopt;
    return Elem::word({*g});
  };
  r.inverse = [](const std::string&) -> std::optional<Elem> { return std::nullopt; };
  r.q = q;
  return r;
}

SuperMatrix define_matrix(const CatalogEntry& e, const std::vector<std::string>& names) {
  SuperMatrix m(plane_parity(), plane_parity());
  for (std::size_t i = 0; i < 4; ++i) m.at(i / 2, i % 2) = e.define(names[i]);
  return m;
}

Pres formal_forms_presentation() {
  std::vector<Generator> gens;
  for (const auto& [n, p] : std::vector<std::pair<std::string, int>>{
           {"a", 0}, {"beta", 1}, {"gamma", 1}, {"d", 0}, {"u", 0}, {"v", 0}, {"w1", 1}, {"w2", 1}})
    gens.push_back({n, p, std::nullopt});
  return Pres("FormsT", gens);
}

struct RttSetup {
  // Forward: reduced entries in the family's presentation.
  SuperMatrix forward;
  const Pres* forward_pres = nullptr;
  // Span: formal entries and the transcribed relations.
  std::vector<Elem> entries, relations;
  std::size_t span_rank_entries = 0, span_rank_family = 0, span_rank_joint = 0;
};

RttSetup build_rtt(const Catalog& cat, const std::string& family) {
  RttSetup s;
  const LaurentScalar q = cat.q();
  const SuperMatrix none(plane_parity(), plane_parity());
  auto inputs_over = [&](const Pres& p, bool t, bool th, bool w) {
    RttInputs in{none, none, none, q};
    if (t) in.t = generator_matrix(p, kT);
    if (th) in.t_hat = generator_matrix(p, kTHat);
    if (w) in.w = generator_matrix(p, kW);
    return in;
  };
  auto family_relations = [&](const CatalogEntry& src, std::vector<std::string> labels, const Pres& target) {
    Resolver r = generator_resolver(&target, q);
    for (const auto& label : labels)
      for (const Identity* id : src.identities(label)) s.relations.push_back(evaluate(id->lhs, r) - evaluate(id->rhs, r));
  };

  static const Pres formal = formal_forms_presentation();
  const Pres* span_pres = nullptr;
  RttInputs span_in{none, none, none, q};
  if (family == "glq11") {
    const CatalogEntry& e = cat.entry("A_glq11");
    s.forward_pres = &e.presentation();
    RttInputs in = inputs_over(e.presentation(), true, false, false);
    in.t.check_homogeneous(e.presentation(), 0, "T");
    s.forward = rtt_matrix(family, in);
    span_pres = &e.presentation();
    span_in = in;
    family_relations(e, {"glq11"}, *span_pres);
  } else if (family == "mixed") {
    const CatalogEntry& e = cat.entry("Omega");
    s.forward_pres = &e.presentation();
    RttInputs in = inputs_over(e.presentation(), true, true, false);
    in.t.check_homogeneous(e.presentation(), 0, "T");
    in.t_hat.check_homogeneous(e.presentation(), 1, "dT");
    s.forward = rtt_matrix(family, in);
    span_pres = &e.presentation();
    span_in = in;
    family_relations(e, {"mixed.ab", "mixed"}, *span_pres);
  } else if (family == "hat") {
    const CatalogEntry& e = cat.entry("A_hat");
    s.forward_pres = &e.presentation();
    RttInputs in = inputs_over(e.presentation(), false, true, false);
    in.t_hat.check_homogeneous(e.presentation(), 1, "dT");
    s.forward = rtt_matrix(family, in);
    span_pres = &e.presentation();
    span_in = in;
    family_relations(e, {"hat"}, *span_pres);
  } else if (family == "forms.T") {
    const CatalogEntry& e = cat.entry("Omega_loc");
    s.forward_pres = &e.presentation();
    RttInputs in = inputs_over(e.presentation(), true, false, false);
    in.w = define_matrix(e, kW);
    in.w.check_homogeneous(e.presentation(), 1, "W");
    s.forward = rtt_matrix(family, in);
    span_pres = &formal;
    span_in = inputs_over(formal, true, false, true);
    family_relations(e, {"forms.T"}, *span_pres);
  } else if (family == "forms") {
    const CatalogEntry& e = cat.entry("Forms");
    s.forward_pres = &e.presentation();
    RttInputs in = inputs_over(e.presentation(), false, false, true);
    in.w.check_homogeneous(e.presentation(), 1, "W");
    s.forward = rtt_matrix(family, in);
    span_pres = &e.presentation();
    span_in = in;
    family_relations(cat.entry("Omega_loc"), {"forms"}, *span_pres);
  } else {
    throw UnknownNameError("unknown R-matrix family '" + family + "'");
  }
  s.forward = s.forward.normalized(*s.forward_pres);

  SuperMatrix formal_m = rtt_matrix(family, span_in);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) s.entries.push_back(formal_m.at(i, j));
  std::vector<Word> basis;
  std::vector<Elem> joint = s.entries;
  joint.insert(joint.end(), s.relations.begin(), s.relations.end());
  ScalarMatrix all = degree_two_vectors(joint, basis);
  ScalarMatrix ent(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(s.entries.size()));
  ScalarMatrix fam(all.begin() + static_cast<std::ptrdiff_t>(s.entries.size()), all.end());
  s.span_rank_entries = rank(ent);
  s.span_rank_family = rank(fam);
  s.span_rank_joint = rank(all);
  return s;
}

}  // namespace

ScalarMatrix degree_two_vectors(const std::vector<Elem>& elems, std::vector<Word>& basis) {
  std::map<Word, std::size_t> index;
  for (std::size_t i = 0; i < basis.size(); ++i) index.emplace(basis[i], i);
  for (const auto& e : elems)
    for (const auto& [w, c] : e.terms())
      if (w.size() == 2 && index.emplace(w, basis.size()).second) basis.push_back(w);
  ScalarMatrix m(elems.size(), std::vector<LaurentScalar>(basis.size()));
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (const auto& [w, c] : elems[i].terms())
      if (w.size() == 2) m[i][index.at(w)] = c;
  return m;
}

CheckList verify_rtt_family(const Catalog& cat, const std::string& family) {
  bool known = false;
  for (const auto& f : rtt_family_names()) known |= f == family;
  if (!known) throw UnknownNameError("unknown R-matrix family '" + family + "'");
  const Catalog* c = &cat;
  Lazy<RttSetup> setup([c, family] { return build_rtt(*c, family); });
  CheckList out;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      std::string pos = std::to_string(i + 1) + std::to_string(j + 1);
      out.push_back({"rtt." + family + ".e" + pos, "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                                       ") of the R-matrix equation reduces to zero",
                     "rtt." + family, [setup, i, j] {
                       const RttSetup& s = setup.get();
                       return zero_outcome(s.forward.at(i, j), *s.forward_pres);
                     }});
    }
  out.push_back({"rtt." + family + ".span", "degree-2 entry equations span the " + family + " relations",
                 "rtt." + family, [setup] {
                   const RttSetup& s = setup.get();
                   if (s.span_rank_entries == s.span_rank_family && s.span_rank_family == s.span_rank_joint)
                     return Outcome::ok();
                   return Outcome::failed("rank of entries " + std::to_string(s.span_rank_entries) + ", of relations " +
                                          std::to_string(s.span_rank_family) + ", joint " +
                                          std::to_string(s.span_rank_joint));
                 }});
  return out;
}

Pres graded_union(const Pres& a, const Pres& b, const std::string& name) {
  const auto off = static_cast<GenId>(a.size());
  std::vector<Generator> gens = a.generators();
  for (Generator g : b.generators()) {
    if (g.inverse_of) g.inverse_of = static_cast<GenId>(*g.inverse_of + off);
    gens.push_back(g);
  }
  Pres u(name, gens);
  auto shift = [off](const Word& w) {
    Word r = w;
    for (auto& g : r) g = static_cast<GenId>(g + off);
    return r;
  };
  for (const auto& r : a.rules()) u.add_rule(r);
  for (const auto& r : b.rules()) {
    Elem rep;
    for (const auto& [w, c] : r.replacement.terms()) rep.add(shift(w), c);
    u.add_rule({shift(r.pattern), rep, r.localized});
  }
  for (const auto& [hi, lo] : a.free_pairs()) u.declare_free(hi, lo);
  for (const auto& [hi, lo] : b.free_pairs()) u.declare_free(static_cast<GenId>(hi + off), static_cast<GenId>(lo + off));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      auto ga = static_cast<GenId>(i), gb = static_cast<GenId>(j + off);
      LaurentScalar sign((a.parity(ga) && u.parity(gb)) ? -1 : 1);
      u.add_rule({Word{gb, ga}, Elem::word({ga, gb}, sign), false});
    }
  u.validate();
  return u;
}

namespace {

struct PlaneSetup {
  Pres group_plane, group_dual, hat_plane, hat_dual;
};

SuperMatrix column(const Pres& p, const char* first, const char* second) {
  SuperMatrix m(plane_parity(), {0});
  m.at(0, 0) = p.gen(first);
  m.at(1, 0) = p.gen(second);
  return m;
}

// Pass iff u*v - c*v*u reduces to zero.
Outcome commutes(const Pres& p, const Elem& u, const Elem& v, const LaurentScalar& c) {
  return zero_outcome(p.normalize(u * v - (v * u).scaled(c)), p);
}

}  // namespace

CheckList verify_plane_covariance(const Catalog& cat) {
  const LaurentScalar q = cat.q();
  const Catalog* c = &cat;
  Lazy<PlaneSetup> setup([c] {
    const Pres& t = c->presentation("A_glq11");
    const Pres& th = c->presentation("A_hat");
    const Pres& pl = c->presentation("Plane");
    const Pres& du = c->presentation("DualPlane");
    return PlaneSetup{graded_union(t, pl, "A_glq11+Plane"), graded_union(t, du, "A_glq11+DualPlane"),
                      graded_union(th, pl, "A_hat+Plane"), graded_union(th, du, "A_hat+DualPlane")};
  });
  CheckList out;
  using Member = Pres PlaneSetup::*;
  struct Image {
    const char* id;
    Member pres;
    const std::vector<std::string>* matrix;
    const char* first;
    const char* second;
    bool to_plane;  // image obeys x theta = q theta x, theta^2 = 0; otherwise the dual relations
  };
  const Image images[] = {
      {"TX", &PlaneSetup::group_plane, &kT, "x", "theta", true},
      {"TXhat", &PlaneSetup::group_dual, &kT, "phi", "y", false},
      {"dTX", &PlaneSetup::hat_plane, &kTHat, "x", "theta", false},
      {"dTXhat", &PlaneSetup::hat_dual, &kTHat, "phi", "y", true},
  };
  for (const Image& im : images) {
    auto image = [setup, im] {
      const Pres& p = setup.get().*im.pres;
      SuperMatrix v = generator_matrix(p, *im.matrix) * column(p, im.first, im.second);
      return std::make_pair(v.at(0, 0), v.at(1, 0));
    };
    std::string base = std::string("plane.") + im.id;
    if (im.to_plane) {
      out.push_back({base + ".x_theta", "first and second image coordinates q-commute", "plane", [setup, im, image, q] {
                       auto [u, v] = image();
                       return commutes(setup.get().*im.pres, u, v, q);
                     }});
      out.push_back({base + ".theta_sq", "second image coordinate squares to zero", "plane", [setup, im, image] {
                       auto [u, v] = image();
                       const Pres& p = setup.get().*im.pres;
                       return zero_outcome(p.normalize(v * v), p);
                     }});
    } else {
      out.push_back({base + ".phi_sq", "first image coordinate squares to zero", "plane", [setup, im, image] {
                       auto [u, v] = image();
                       const Pres& p = setup.get().*im.pres;
                       return zero_outcome(p.normalize(u * u), p);
                     }});
      out.push_back({base + ".phi_y", "image coordinates obey the dual plane relation", "plane", [setup, im, image, q] {
                       auto [u, v] = image();
                       return commutes(setup.get().*im.pres, u, v, q.inverse());
                     }});
    }
  }

  const CatalogEntry* plane = &cat.entry("Plane");
  for (std::size_t k = 0; k < 4; ++k) {
    out.push_back({"plane.quadratic.e" + std::to_string(k + 1),
                   "component " + std::to_string(k + 1) + " of X (x) X - q^-1 R X (x) X", "plane", [plane, k, q] {
                     const Pres& p = plane->presentation();
                     SuperMatrix x = column(p, "x", "theta");
                     SuperMatrix xx(std::vector<int>{0, 1, 1, 0}, {0});
                     for (std::size_t i = 0; i < 2; ++i)
                       for (std::size_t j = 0; j < 2; ++j) xx.at(2 * i + j, 0) = x.at(i, 0) * x.at(j, 0);
                     SuperMatrix d = xx - (r_hat(q) * xx).scaled(q.inverse());
                     return zero_outcome(p.normalize(d.at(k, 0)), p);
                   }});
  }
  const CatalogEntry* calc = &cat.entry("PlaneCalc");
  for (std::size_t k = 0; k < 4; ++k) {
    std::string pos = std::to_string(k / 2 + 1) + std::to_string(k % 2 + 1);
    out.push_back({"plane.mixed.e" + pos, "component " + pos + " of (-1)^p(X) X (x) dX - q R dX (x) X", "plane",
                   [calc, k, q] {
                     const Pres& p = calc->presentation();
                     SuperMatrix x = column(p, "x", "theta"), dx = column(p, "Dx", "Dtheta");
                     SuperMatrix left(std::vector<int>{0, 1, 1, 0}, {0}), right = left;
                     for (std::size_t i = 0; i < 2; ++i)
                       for (std::size_t j = 0; j < 2; ++j) {
                         Elem l = x.at(i, 0) * dx.at(j, 0);
                         left.at(2 * i + j, 0) = plane_parity()[i] ? -l : l;
                         right.at(2 * i + j, 0) = dx.at(i, 0) * x.at(j, 0);
                       }
                     SuperMatrix d = left - (r_hat(q) * right).scaled(q);
                     return zero_outcome(p.normalize(d.at(k, 0)), p);
                   }});
  }
  for (const char* name : {"Plane", "DualPlane", "PlaneCalc"}) {
    // PlaneCalc includes both planes; each identity is checked where it is stated.
    for (const auto* id : cat.entry(name).identities("plane"))
      if (id->source == name) out.push_back(identity_check(cat.entry(name), *id));
  }
  return out;
}

namespace {

ScalarMatrix constants(const SuperMatrix& m) {
  ScalarMatrix r(m.rows(), std::vector<LaurentScalar>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const Elem& e = m.at(i, j);
      if (e.max_degree() > 0) throw InvalidInputError("matrix entry is not a scalar");
      r[i][j] = e.coefficient(Word{});
    }
  return r;
}

Outcome matrix_zero(const SuperMatrix& m) {
  if (m.is_zero()) return Outcome::ok();
  std::string r;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) {
        if (!r.empty()) r += "; ";
        r += "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") " + m.at(i, j).coefficient(Word{}).to_string();
      }
  return Outcome::failed(r);
}

}  // namespace

CheckList check_hecke_braid(const Catalog& cat) {
  const LaurentScalar q = cat.q();
  CheckList out;
  out.push_back({"rmatrix.hecke", "R^2 = (q - q^-1) R + 1", "rmatrix", [q] {
                   SuperMatrix r = r_hat(q);
                   return matrix_zero(r * r - r.scaled(q - q.inverse()) - SuperMatrix::identity(r.row_parity()));
                 }});
  out.push_back({"rmatrix.inverse", "R (R - (q - q^-1)) = 1", "rmatrix", [q] {
                   SuperMatrix r = r_hat(q);
                   return matrix_zero(r * r_hat_inverse(q) - SuperMatrix::identity(r.row_parity()));
                 }});
  for (bool graded : {true, false}) {
    std::string conv = graded ? "graded" : "plain";
    out.push_back({"rmatrix.braid." + conv, "R12 R23 R12 = R23 R12 R23 with the " + conv + " tensor product", "rmatrix",
                   [q, graded] {
                     SuperMatrix r = r_hat(q), id = SuperMatrix::identity(plane_parity());
                     SuperMatrix r12 = graded ? graded_kron(r, id) : plain_kron(r, id);
                     SuperMatrix r23 = graded ? graded_kron(id, r) : plain_kron(id, r);
                     return matrix_zero(r12 * r23 * r12 - r23 * r12 * r23);
                   }});
  }
  out.push_back({"rmatrix.spectrum", "at q = 2 the spectrum is {2, 2, -1/2, -1/2}", "rmatrix", [] {
                   SuperMatrix r = r_hat(LaurentScalar(2));
                   SuperMatrix id = SuperMatrix::identity(r.row_parity());
                   std::size_t n_hi = 4 - rank(constants(r - id.scaled(LaurentScalar(2))));
                   std::size_t n_lo = 4 - rank(constants(r + id.scaled(LaurentScalar(Rational(1, 2)))));
                   if (n_hi == 2 && n_lo == 2) return Outcome::ok();
                   return Outcome::failed("eigenspace dimensions: 2 -> " + std::to_string(n_hi) + ", -1/2 -> " +
                                          std::to_string(n_lo));
                 }});
  const CatalogEntry* omega = &cat.entry("Omega");
  out.push_back({"rmatrix.koszul", "(M (x) I)(I (x) N) = M (x) N for M = T, N = dT and M = dT, N = T", "rmatrix", [omega] {
                   const Pres& p = omega->presentation();
                   SuperMatrix t = generator_matrix(p, kT), th = generator_matrix(p, kTHat);
                   SuperMatrix id = SuperMatrix::identity(plane_parity());
                   SuperMatrix d1 = graded_kron(t, id) * graded_kron(id, th) - graded_kron(t, th);
                   SuperMatrix d2 = graded_kron(th, id) * graded_kron(id, t) - graded_kron(th, t);
                   for (const SuperMatrix* d : {&d1, &d2})
                     for (std::size_t i = 0; i < 4; ++i)
                       for (std::size_t j = 0; j < 4; ++j)
                         if (!d->at(i, j).is_zero()) return Outcome::failed(p.format(d->at(i, j)));
                   return Outcome::ok();
                 }});
  return out;
}

}  // namespace qdc
