#ifndef MODRAD_H
#define MODRAD_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ModradStatus {
  MODRAD_STATUS_OK = 0,
  /*
   The predicate is false, or a verify run had a failing claim.
   */
  MODRAD_STATUS_FALSE = 1,
  MODRAD_STATUS_PARSE_ERROR = 2,
  MODRAD_STATUS_EVAL_ERROR = 3,
  MODRAD_STATUS_NULL_POINTER = 4,
  MODRAD_STATUS_INVALID_UTF8 = 5,
  MODRAD_STATUS_UNKNOWN_CLAIM = 6,
  MODRAD_STATUS_UNKNOWN_PREDICATE = 7,
  MODRAD_STATUS_UNKNOWN_CORPUS = 8,
  MODRAD_STATUS_UNKNOWN_TARGET = 9,
  MODRAD_STATUS_PANIC = 10,
} ModradStatus;

/*
 An evaluated ring, module, ideal or submodule expression.
 */
typedef struct ModradObject ModradObject;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Parses and evaluates `expr`, storing a new object in `*out`.

 # Safety
 `expr` is a NUL-terminated string and `out` is writable.
 */
enum ModradStatus modrad_eval(const char *expr, struct ModradObject **out);

/*
 # Safety
 `obj` is null or came from [`modrad_eval`] and was not freed.
 */
void modrad_object_free(struct ModradObject *obj);

/*
 Writes the object's invariants as one JSON object to `*out_json`.

 # Safety
 `obj` is a live object and `out_json` is writable.
 */
enum ModradStatus modrad_info(const struct ModradObject *obj, char **out_json);

/*
 Decides `predicate` on the object. Returns `OK` when it holds and
 `FALSE` when it does not; in the latter case `*out_witness` (if
 non-null) receives the rendered witness or NULL.

 # Safety
 `obj` is a live object, `predicate` a NUL-terminated string and
 `out_witness` null or writable.
 */
enum ModradStatus modrad_check(const struct ModradObject *obj,
                               const char *predicate,
                               char **out_witness);

/*
 The canonical printed form of the object's expression.

 # Safety
 `obj` is a live object and `out` is writable.
 */
enum ModradStatus modrad_object_expression(const struct ModradObject *obj, char **out);

/*
 Runs claims over a named corpus and writes JSON Lines reports to
 `*out_jsonl`. `claims` is a comma-separated id list, or NULL/empty for
 every claim. Returns `FALSE` when any claim fails.

 # Safety
 `claims` is null or a NUL-terminated string, `corpus_name` a
 NUL-terminated string and `out_jsonl` writable.
 */
enum ModradStatus modrad_verify(const char *claims, const char *corpus_name, char **out_jsonl);

/*
 Runs one counterexample search and writes its JSON result. Returns
 `FALSE` when nothing was found.

 # Safety
 `target` and `corpus_name` are NUL-terminated strings and `out_json` is
 writable.
 */
enum ModradStatus modrad_search(const char *target, const char *corpus_name, char **out_json);

/*
 Writes one JSON object per claim, one per line.

 # Safety
 `out_jsonl` is writable.
 */
enum ModradStatus modrad_list_claims(char **out_jsonl);

/*
 Caps the size of every carrier built afterwards; `0` restores the
 default.
 */
void modrad_set_carrier_cap(size_t cap);

/*
 # Safety
 `s` is null or a string returned by this library and not yet freed.
 */
void modrad_string_free(char *s);

/*
 Message for the last non-`OK` status on this thread, or NULL. Valid
 until the next call into the library from the same thread.
 */
const char *modrad_last_error_message(void);

/*
 Status code as a static NUL-terminated name.
 */
const char *modrad_status_name(enum ModradStatus status);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MODRAD_H */
