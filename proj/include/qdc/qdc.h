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

#ifndef QDC_QDC_H
#define QDC_QDC_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define QDC_API __declspec(dllexport)
#else
#define QDC_API __attribute__((visibility("default")))
#endif

typedef enum qdc_status {
  QDC_OK = 0,
  QDC_ERR_NULL_ARGUMENT = 1,
  QDC_ERR_PARSE = 2,
  QDC_ERR_UNKNOWN_NAME = 3,
  QDC_ERR_INVALID_INPUT = 4,
  QDC_ERR_DOMAIN = 5,
  QDC_ERR_UNSUPPORTED = 6,
  QDC_ERR_STEP_BUDGET = 7,
  QDC_ERR_INTERNAL = 8
} qdc_status;

typedef enum qdc_format { QDC_FORMAT_TEXT = 0, QDC_FORMAT_JSON = 1 } qdc_format;

/* Loaded catalog, symbolic or with q bound to a rational. */
typedef struct qdc_workspace qdc_workspace;

QDC_API const char* qdc_version(void);
QDC_API const char* qdc_status_string(qdc_status status);

/* q0 is NULL for symbolic mode, otherwise a nonzero rational such as "2" or "-3/5". */
QDC_API qdc_status qdc_workspace_new(const char* q0, qdc_workspace** out);
QDC_API void qdc_workspace_free(qdc_workspace* ws);
/* Message of the last failed call on ws; empty after success. Owned by ws. */
QDC_API const char* qdc_workspace_last_error(const qdc_workspace* ws);
/* Message of the last failed call on this thread, workspace or not. */
QDC_API const char* qdc_last_error(void);
QDC_API int qdc_workspace_is_numeric(const qdc_workspace* ws);

/* Strings returned through char** are owned by the caller; release with qdc_string_free. */
QDC_API void qdc_string_free(char* s);

/* Canonical normal form of expr in a presentation. */
QDC_API qdc_status qdc_normalize(qdc_workspace* ws, const char* presentation, const char* expr, char** out);

/* Runs a suite; *all_pass is 1 iff every check passed. */
QDC_API qdc_status qdc_verify(qdc_workspace* ws, const char* suite, qdc_format format, char** report, int* all_pass);

/* Local confluence up to max_degree; *ok is 1 iff no overlap fails. */
QDC_API qdc_status qdc_confluence(qdc_workspace* ws, const char* presentation, unsigned max_degree, char** report,
                                  int* ok);

/* Newline-separated names. */
QDC_API qdc_status qdc_list_presentations(qdc_workspace* ws, char** out);
QDC_API qdc_status qdc_list_suites(char** out);

#ifdef __cplusplus
}
#endif

#endif
