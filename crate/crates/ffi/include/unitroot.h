#ifndef UNITROOT_H
#define UNITROOT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Status codes; 0 through 5 mirror the CLI exit codes.
 */
typedef enum UrStatus {
  UR_STATUS_OK = 0,
  UR_STATUS_OTHER = 1,
  UR_STATUS_VALIDATION = 2,
  UR_STATUS_NON_ORDINARY = 3,
  UR_STATUS_ORACLE_INCONSISTENT = 4,
  UR_STATUS_DISAGREEMENT = 5,
  UR_STATUS_NULL_POINTER = 10,
  UR_STATUS_INVALID_UTF8 = 11,
  UR_STATUS_UNKNOWN_COMMAND = 12,
  UR_STATUS_PANIC = 13,
} UrStatus;

/*
 Opaque instance handle.
 */
typedef struct UrInstance UrInstance;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Parse a JSON instance document into a new handle stored in `*out`.

 # Safety
 `json` must be a NUL-terminated string and `out` a valid pointer.
 */
enum UrStatus ur_instance_from_json(const char *json, struct UrInstance **out);

/*
 Release a handle. Null is ignored.

 # Safety
 `instance` must come from [`ur_instance_from_json`] and not be freed twice.
 */
void ur_instance_free(struct UrInstance *instance);

/*
 Number of monomials `N` and of unit monomials `M`.

 # Safety
 All pointers must be valid.
 */
enum UrStatus ur_instance_basis_size(const struct UrInstance *instance,
                                     uintptr_t *n_monomials,
                                     uintptr_t *unit_count);

/*
 Run `command` (`basis`, `hasse-witt`, `zeta`, `unit-roots` or `verify`) and store
 the JSON report in `*out_json`. `precision = 0` keeps the instance's own.
 The report is produced even when the status is not `Ok`.

 # Safety
 `instance` must be a live handle, `command` NUL-terminated, `out_json` valid.
 */
enum UrStatus ur_run(const struct UrInstance *instance,
                     const char *command,
                     uint32_t precision,
                     char **out_json);

/*
 Release a string returned by this library. Null is ignored.

 # Safety
 `s` must come from this library and not be freed twice.
 */
void ur_string_free(char *s);

/*
 Message for the last failing call on this thread, or null. Valid until the next
 call into the library from the same thread.
 */
const char *ur_last_error_message(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* UNITROOT_H */
