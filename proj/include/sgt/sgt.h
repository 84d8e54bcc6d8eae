#ifndef SGT_H
#define SGT_H

/* C interface to the symplectic pattern dynamics library.
 *
 * Every operation takes a UTF-8 JSON request and, on success, hands back an
 * opaque result buffer holding a UTF-8 JSON (or CSV/JSONL) payload. Buffers
 * are owned by the caller and released with sgt_buffer_free. On failure the
 * functions return a nonzero error code; sgt_last_error() returns a
 * thread-local description of the most recent failure.
 *
 * Request fields (superset; see README for per-operation schemas):
 *   k, r, lambda, m, alpha, q, mode ("exact"|"float"), eps, horizon,
 *   trajectories, steps, seed, threads, claim, kernel, record, format.
 * In exact mode, alpha and q entries are strings "p/q" or integers; float
 * literals are rejected.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

#define SGT_OK 0
#define SGT_ERROR_INVALID_ARGUMENT 1 /* malformed request JSON or fields */
#define SGT_ERROR_DOMAIN 2           /* parameter outside its admissible range */
#define SGT_ERROR_OVERFLOW 3         /* enumeration cap exceeded */
#define SGT_ERROR_INTERNAL 4

typedef struct sgt_buffer sgt_buffer;

const char* sgt_buffer_data(const sgt_buffer* buf); /* NUL-terminated */
size_t sgt_buffer_size(const sgt_buffer* buf);
void sgt_buffer_free(sgt_buffer* buf);

const char* sgt_version(void);
const char* sgt_strerror(int code);
/* Detail for the most recent failing call on this thread; valid until the
 * next sgt_* call on the same thread. */
const char* sgt_last_error(void);

/* {"k","lambda","q","mode"} -> {"value": "p/q" | number} */
int sgt_schur(const char* request_json, sgt_buffer** out);

/* {"r","lambda","m"} -> {"lambda","m","terms":[{"beta","mult"}]} */
int sgt_pieri(const char* request_json, sgt_buffer** out);

/* {"kernel":"P"|"S"|"Q"|"mu"|"m"|"nu", "k","lambda","alpha","q","mode","eps",
 *  plus "m" for mu, "from":{"u","z","y"} for Q, "m_max" for nu}
 * -> {"from", "entries":[{"to","mass"}], "tail_bound"} */
int sgt_kernel_row(const char* request_json, sgt_buffer** out);

/* {"k","alpha","q","horizon","trajectories","seed","record":"rows"|"full",
 *  "format":"csv"|"jsonl","threads"} -> {"seed", "csv"} or {"seed","jsonl"} */
int sgt_simulate_discrete(const char* request_json, sgt_buffer** out);

/* {"k","q","horizon","trajectories","seed","record_events","threads"}
 * -> {"seed","events_jsonl","final_csv"} */
int sgt_simulate_continuous(const char* request_json, sgt_buffer** out);

/* {"r","steps","trajectories","seed","threads"} -> {"seed","csv"} */
int sgt_randmat(const char* request_json, sgt_buffer** out);

/* {"claim","samples","seed","threads"} -> verification report JSON */
int sgt_verify(const char* request_json, sgt_buffer** out);

#ifdef __cplusplus
}
#endif

#endif /* SGT_H */
