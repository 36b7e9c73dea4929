#ifndef MESSIAEN_H
#define MESSIAEN_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Result of every fallible call.
typedef enum MsnStatus {
  MSN_STATUS_OK = 0,
  MSN_STATUS_NULL_ARGUMENT = 1,
  MSN_STATUS_INVALID_UTF8 = 2,
  // Malformed text input.
  MSN_STATUS_PARSE = 3,
  // Well-formed input outside an operation's domain.
  MSN_STATUS_DOMAIN = 4,
  // An orbit did not close within the iteration cap.
  MSN_STATUS_CAP_EXCEEDED = 5,
  // A result does not fit the requested integer type.
  MSN_STATUS_OVERFLOW = 6,
  // A caller-provided buffer is too small.
  MSN_STATUS_BUFFER_TOO_SMALL = 7,
  MSN_STATUS_INDEX_OUT_OF_RANGE = 8,
  // Internal failure; the library state is unchanged.
  MSN_STATUS_PANIC = 9,
} MsnStatus;

// Which shipped catalog to open.
typedef enum MsnSeed {
  MSN_SEED_TALAS = 0,
  MSN_SEED_QUATUOR = 1,
} MsnSeed;

typedef struct MsnCanon MsnCanon;

typedef struct MsnCatalog MsnCatalog;

typedef struct MsnOrbit MsnOrbit;

typedef struct MsnPerm MsnPerm;

typedef struct MsnRhythm MsnRhythm;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread, or an empty string.
// The pointer stays valid until the next call into this library.
const char *msn_last_error(void);

// # Safety
// `s` must be null or a string returned by this library, not yet freed.
void msn_string_free(char *s);

// Parses the rhythm text format, e.g. `"2 3/2 2 @unit=double croche"`.
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be writable.
enum MsnStatus msn_rhythm_parse(const char *text_in, struct MsnRhythm **out);

// # Safety
// `r` must be null or a live handle from this library.
void msn_rhythm_free(struct MsnRhythm *r);

// Number of durations, 0 for a null handle.
//
// # Safety
// `r` must be null or a live handle.
size_t msn_rhythm_len(const struct MsnRhythm *r);

// Text form including the unit; parses back with [`msn_rhythm_parse`].
//
// # Safety
// `r` must be a live handle; `out` must be writable.
enum MsnStatus msn_rhythm_to_string(const struct MsnRhythm *r, char **out);

// # Safety
// `r` must be a live handle; `out` must be writable.
enum MsnStatus msn_rhythm_retrograde(const struct MsnRhythm *r, struct MsnRhythm **out);

// # Safety
// `r` must be a live handle; `out` must be writable.
enum MsnStatus msn_rhythm_is_non_retrogradable(const struct MsnRhythm *r, bool *out);

// Multiplies every duration by `ratio` (`"n"` or `"n/d"`).
//
// # Safety
// `r` must be a live handle, `ratio` a NUL-terminated string, `out` writable.
enum MsnStatus msn_rhythm_augment(const struct MsnRhythm *r,
                                  const char *ratio,
                                  struct MsnRhythm **out);

// `wing ++ core ++ retrograde(wing)`.
//
// # Safety
// `core` and `wing` must be live handles; `out` must be writable.
enum MsnStatus msn_rhythm_amplify(const struct MsnRhythm *core,
                                  const struct MsnRhythm *wing,
                                  struct MsnRhythm **out);

// # Safety
// `r` must be a live handle; `out` must be writable.
enum MsnStatus msn_rhythm_eliminate(const struct MsnRhythm *r, size_t k, struct MsnRhythm **out);

// # Safety
// `r` must be a live handle, `ratio` a NUL-terminated string, `out` writable.
enum MsnStatus msn_rhythm_scale_central(const struct MsnRhythm *r,
                                        const char *ratio,
                                        struct MsnRhythm **out);

// Exact total as `"n"` or `"n/d"`.
//
// # Safety
// `r` must be a live handle; `out` must be writable.
enum MsnStatus msn_rhythm_total(const struct MsnRhythm *r, char **out);

// `MSN_STATUS_DOMAIN` when the total is not a whole number of units.
//
// # Safety
// `r` must be a live handle; `out` must be writable.
enum MsnStatus msn_rhythm_is_prime_total(const struct MsnRhythm *r, bool *out);

// Full analysis report as JSON (the CLI's machine format).
//
// # Safety
// `r` must be a live handle; `out` must be writable.
enum MsnStatus msn_rhythm_analyze_json(const struct MsnRhythm *r, char **out);

// Builds a canon. `voices` holds whitespace-separated `delay:ratio` pairs,
// e.g. `"0:1 1:3/2"`.
//
// # Safety
// `subject` must be a live handle, `voices` a NUL-terminated string and
// `out` writable.
enum MsnStatus msn_canon_build(const struct MsnRhythm *subject,
                               const char *voices,
                               struct MsnCanon **out);

// # Safety
// `c` must be null or a live handle.
void msn_canon_free(struct MsnCanon *c);

// # Safety
// `c` must be null or a live handle.
size_t msn_canon_voice_count(const struct MsnCanon *c);

// Onsets of one voice (0-based index) as space-separated rationals.
//
// # Safety
// `c` must be a live handle; `out` must be writable.
enum MsnStatus msn_canon_onsets(const struct MsnCanon *c, size_t voice, char **out);

// Time at which the last voice ends.
//
// # Safety
// `c` must be a live handle; `out` must be writable.
enum MsnStatus msn_canon_end(const struct MsnCanon *c, char **out);

// Parses integers 0..11 or note names into a 12-bit set.
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be writable.
enum MsnStatus msn_pcset_parse(const char *text_in, uint16_t *out);

// Transposes by `t` semitones. Bits above 11 are ignored.
uint16_t msn_pcset_transpose(uint16_t bits, int64_t t);

// # Safety
// `out` must be writable.
enum MsnStatus msn_pcset_minimal_period(uint16_t bits, uint8_t *out);

// Writes the mode number (1..7, or 0 when none matches) and the 0-based
// transposition offset.
//
// # Safety
// `mode` and `offset` must be writable.
enum MsnStatus msn_pcset_classify(uint16_t bits, uint8_t *mode, uint8_t *offset);

// # Safety
// `out` must be writable.
enum MsnStatus msn_pcset_is_truncated(uint16_t bits, bool *out);

// Fills `buf` with every limited-transposition set in ascending order and
// writes the count to `len`. With a null or short buffer only `len` is
// written and `MSN_STATUS_BUFFER_TOO_SMALL` is returned.
//
// # Safety
// `buf` must be null or valid for `capacity` writes; `len` must be writable.
enum MsnStatus msn_pcset_enumerate_limited(uint16_t *buf, size_t capacity, size_t *len);

// Parses whitespace-separated 1-based images.
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be writable.
enum MsnStatus msn_perm_parse(const char *text_in, struct MsnPerm **out);

// # Safety
// `out` must be writable.
enum MsnStatus msn_perm_chronochromie(struct MsnPerm **out);

// Center-outward permutation on `n` points.
//
// # Safety
// `out` must be writable.
enum MsnStatus msn_perm_fan(size_t n, bool right_first, struct MsnPerm **out);

// # Safety
// `p` must be null or a live handle.
void msn_perm_free(struct MsnPerm *p);

// # Safety
// `p` must be null or a live handle.
size_t msn_perm_len(const struct MsnPerm *p);

// 1-based images, space-separated.
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum MsnStatus msn_perm_to_string(const struct MsnPerm *p, char **out);

// Order of the permutation; `MSN_STATUS_OVERFLOW` past `u64`.
//
// # Safety
// `p` must be a live handle; `out` must be writable.
enum MsnStatus msn_perm_order(const struct MsnPerm *p, uint64_t *out);

// Reorders a rhythm: `out[i] = r[p[i]]`.
//
// # Safety
// `p` and `r` must be live handles; `out` must be writable.
enum MsnStatus msn_perm_apply_rhythm(const struct MsnPerm *p,
                                     const struct MsnRhythm *r,
                                     struct MsnRhythm **out);

// Iterates `p` from `base` until it returns. A null `base` uses the
// chromatic durations `1..n`. `cap` of 0 means the default cap.
//
// # Safety
// `p` must be a live handle, `base` null or a live handle, `out` writable.
enum MsnStatus msn_perm_orbit(const struct MsnPerm *p,
                              const struct MsnRhythm *base,
                              size_t cap,
                              struct MsnOrbit **out);

// # Safety
// `o` must be null or a live handle.
void msn_orbit_free(struct MsnOrbit *o);

// Row count, equal to the number of applications needed to return.
//
// # Safety
// `o` must be null or a live handle.
size_t msn_orbit_len(const struct MsnOrbit *o);

// Copy of row `index` (0-based; row 0 is one application).
//
// # Safety
// `o` must be a live handle; `out` must be writable.
enum MsnStatus msn_orbit_row(const struct MsnOrbit *o, size_t index, struct MsnRhythm **out);

// `n!` in decimal.
//
// # Safety
// `out` must be writable.
enum MsnStatus msn_permutation_count(uint64_t n, char **out);

// Parses catalog text (`id|name|gloss|durations[|source note]` lines).
//
// # Safety
// `text` must be a NUL-terminated string; `out` must be writable.
enum MsnStatus msn_catalog_parse(const char *text_in, struct MsnCatalog **out);

// # Safety
// `out` must be writable.
enum MsnStatus msn_catalog_seed(enum MsnSeed which, struct MsnCatalog **out);

// # Safety
// `c` must be null or a live handle.
void msn_catalog_free(struct MsnCatalog *c);

// # Safety
// `c` must be null or a live handle.
size_t msn_catalog_len(const struct MsnCatalog *c);

// # Safety
// `c` must be a live handle; `out` must be writable.
enum MsnStatus msn_catalog_entry_id(const struct MsnCatalog *c, size_t index, uint32_t *out);

// Copy of the rhythm of entry `index` (0-based, file order).
//
// # Safety
// `c` must be a live handle; `out` must be writable.
enum MsnStatus msn_catalog_entry_rhythm(const struct MsnCatalog *c,
                                        size_t index,
                                        struct MsnRhythm **out);

// Analysis report for entry `index` as JSON.
//
// # Safety
// `c` must be a live handle; `out` must be writable.
enum MsnStatus msn_catalog_report_json(const struct MsnCatalog *c, size_t index, char **out);

// Ids of entries satisfying `predicate` (`nonretro`, `prime`, `augchain`
// or `interleave`). Buffer handling as in [`msn_pcset_enumerate_limited`].
//
// # Safety
// `c` must be a live handle, `predicate` a NUL-terminated string, `buf` null
// or valid for `capacity` writes, `len` writable.
enum MsnStatus msn_catalog_filter(const struct MsnCatalog *c,
                                  const char *predicate,
                                  uint32_t *buf,
                                  size_t capacity,
                                  size_t *len);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* MESSIAEN_H */
