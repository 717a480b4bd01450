/* SPDX-License-Identifier: MIT */
/*
 * padiclab C API.
 *
 * Every fallible call returns a padic_status; on failure the message is
 * available from padic_last_error() on the same thread until the next call.
 * Objects are opaque and released with their matching *_free function.
 * Strings returned through char** are heap allocated and released with
 * padic_free_string().
 */
#ifndef PADICLAB_H
#define PADICLAB_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(PADICLAB_BUILDING_LIBRARY)
#    define PADIC_API __declspec(dllexport)
#  else
#    define PADIC_API __declspec(dllimport)
#  endif
#else
#  define PADIC_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum padic_status {
    PADIC_OK = 0,
    PADIC_ERR_INVALID_ARGUMENT = 1,
    PADIC_ERR_DOMAIN = 2,
    PADIC_ERR_CONVERGENCE = 3,
    PADIC_ERR_IO = 4,
    PADIC_ERR_RANGE = 5,
    PADIC_ERR_INTERNAL = 99
} padic_status;

PADIC_API const char* padic_version(void);
PADIC_API const char* padic_last_error(void);
PADIC_API void padic_free_string(char* s);

/* Real callback used by the derivative and integral entry points. */
typedef double (*padic_real_fn)(double x, void* user);

/* Metadata written into output headers, in the order given. */
typedef struct padic_meta {
    const char* const* keys;
    const char* const* values;
    size_t count;
} padic_meta;

/* ---- p-adic digits and norms ------------------------------------------ */

PADIC_API padic_status padic_is_prime(uint64_t n, int* out);
/* Digits of n >= 0, least significant first. *len receives the digit count
 * even when it exceeds cap (nothing is written past cap). *valuation is -1
 * for n = 0. any_base != 0 accepts composite bases. */
PADIC_API padic_status padic_digits(int64_t n, uint64_t base, int any_base, int* digits, size_t cap, size_t* len,
                                    int* valuation);
/* |num/den|_p; *valuation is meaningful only when *has_valuation != 0. */
PADIC_API padic_status padic_norm(int64_t num, int64_t den, uint64_t p, int* has_valuation, int* valuation,
                                  double* norm);

/* ---- quantum calculus --------------------------------------------------- */

PADIC_API padic_status padic_q_number(double x, double q, double* out);
PADIC_API padic_status padic_q_number2(double x, double r, double q, double* out);
PADIC_API padic_status padic_q_factorial(int n, double q, double* out);
PADIC_API padic_status padic_q_pochhammer(double x, double c, double q, int m, double* out);
PADIC_API padic_status padic_d_q(padic_real_fn f, void* user, double x, double q, double* out);
PADIC_API padic_status padic_d_rq(padic_real_fn f, void* user, double x, double r, double q, double* out);
PADIC_API padic_status padic_k_special(double E, double h, double alpha, double* out);
PADIC_API padic_status padic_f4(double E, double h, double* out);
/* JSON report of the ladder-operator relations; pass r = NaN for the
 * one-parameter algebra. */
PADIC_API padic_status padic_algebra_check(int degree, double q, double r, char** json);

/* ---- Jackson integral and q-series -------------------------------------- */

PADIC_API padic_status padic_jackson_integral(padic_real_fn f, void* user, double c, double q, double* out);
PADIC_API padic_status padic_small_q_series(padic_real_fn f, void* user, double c, double q, int terms, double* out);
PADIC_API padic_status padic_qq_series(padic_real_fn f, void* user, double c, double b, double q, int m_max,
                                       int n_max, double* value, int* diverging, char** diagnostic);
PADIC_API padic_status padic_padic_correspondence(int s, uint64_t p, double* jackson, double* shell_sum);

/* ---- fractal price map --------------------------------------------------- */

typedef struct padic_series padic_series;

PADIC_API padic_status padic_f_b(int64_t r, double base, double b, double* out);
/* r_end < 0 selects ceil(base^n_digits). */
PADIC_API padic_status padic_wave_series(double base, double b, int n_digits, int64_t r_begin, int64_t r_end,
                                         padic_series** out);
/* kind: impulse, zigzag, flat, triangle-converging, triangle-expanding, diagonal */
PADIC_API padic_status padic_pattern(const char* kind, double base, double b, int n_digits, int trend, int refine,
                                     padic_series** out);
PADIC_API padic_status padic_envelope(const double* g, size_t n, double base, double b, double scale,
                                      padic_series** out);
PADIC_API padic_status padic_random_signal(double base, double b, int n_digits, size_t length, uint64_t seed,
                                           padic_series** out);
PADIC_API size_t padic_series_length(const padic_series* s);
PADIC_API padic_status padic_series_get(const padic_series* s, size_t i, int64_t* r, double* value);
/* format: "csv", "json" or "svg". */
PADIC_API padic_status padic_series_format(const padic_series* s, const char* format, const padic_meta* meta,
                                           const char* title, char** out);
PADIC_API void padic_series_free(padic_series* s);

/* Writes rows * m values row-major into out (capacity cap values). */
PADIC_API padic_status padic_delay_embed(const double* x, size_t n, int m, int stride, double* out, size_t cap,
                                         size_t* rows);

/* ---- site algebra and supercoherent states -------------------------------- */

/* 4x4 matrices are row-major in the basis |0>, |+>, |->, |2>. */
PADIC_API padic_status padic_x_operator(int r, int s, double out[16]);
/* spin: 0 up, 1 down */
PADIC_API padic_status padic_creation_annihilation(int spin, int dagger, double out[16]);
PADIC_API padic_status padic_gamma5(double out[16]);
PADIC_API padic_status padic_hamiltonian_spectrum(int sites, double W, double U, double mu, double* out, size_t cap,
                                                  size_t* len);
/* JSON: expansions, anticommutators, gamma5 identity, classification. */
PADIC_API padic_status padic_operators_report(char** json);
/* E and h are (z, +, -). */
PADIC_API padic_status padic_scs_bracket(const double E[3], const double h[3], double ket[4], double bra[4],
                                         double* norm);
/* JSON: exact ket over the Grassmann algebra and its structure report. */
PADIC_API padic_status padic_scs_report(const double E[3], const double h[3], char** json);
/* Complex fields as interleaved (re, im) pairs for z, +, -; bilinears may be NULL. */
PADIC_API padic_status padic_op_symbols(const double E[6], const double h[6], double alpha, const double bilinears[6],
                                        char** json);

/* ---- market simulator ------------------------------------------------------ */

typedef struct padic_market_config {
    int n_agents;
    double W;
    double U;
    double mu;
    double beta_temp; /* INFINITY for zero temperature */
    long steps;
    uint64_t seed;
    double impact;
    double price0;
    int initial_random;
} padic_market_config;

typedef struct padic_market_trace padic_market_trace;

PADIC_API void padic_market_config_default(padic_market_config* cfg);
/* Applies one key=value setting to cfg. */
PADIC_API padic_status padic_market_config_set(padic_market_config* cfg, const char* key, const char* value);
PADIC_API padic_status padic_simulate_market(const padic_market_config* cfg, padic_market_trace** out);
PADIC_API size_t padic_trace_length(const padic_market_trace* t);
PADIC_API padic_status padic_trace_row(const padic_market_trace* t, size_t i, long* step, int* n_buy, int* n_sell,
                                       int* n_hold, double* price);
PADIC_API padic_status padic_trace_csv(const padic_market_trace* t, const padic_meta* meta, char** out);
PADIC_API void padic_trace_free(padic_market_trace* t);

/* ---- fitting ------------------------------------------------------------------ */

typedef struct padic_price_series padic_price_series;
typedef struct padic_fit padic_fit;

typedef struct padic_fit_grid {
    const double* bases;
    size_t n_bases;
    double b_min;
    double b_max;
    double b_step;
    int64_t t0_begin;
    int64_t t0_end;
} padic_fit_grid;

/* Defaults: bases {2, 3, 5}, b in [0.2, 2.0] step 0.05, t0 in [0, 81). */
PADIC_API void padic_fit_grid_default(padic_fit_grid* grid);
PADIC_API padic_status padic_load_series(const char* path, const char* column, const char* time_column,
                                         padic_price_series** out);
PADIC_API size_t padic_price_series_length(const padic_price_series* s);
PADIC_API const double* padic_price_series_values(const padic_price_series* s);
PADIC_API void padic_price_series_free(padic_price_series* s);
/* Rows of (open, low, high, close); *rows receives the bar count. */
PADIC_API padic_status padic_load_ohlc(const char* path, double* out, size_t cap, size_t* rows);

PADIC_API padic_status padic_fit_padic(const double* y, size_t n, const padic_fit_grid* grid, int jobs,
                                       padic_fit** out);
PADIC_API padic_status padic_fit_params(const padic_fit* fit, double* base, double* b, int64_t* t0, double* A,
                                        double* C, double* rmse);
PADIC_API size_t padic_fit_length(const padic_fit* fit);
PADIC_API const double* padic_fit_values(const padic_fit* fit);
PADIC_API padic_status padic_fit_json(const padic_fit* fit, const padic_meta* meta, char** out);
PADIC_API void padic_fit_free(padic_fit* fit);
PADIC_API padic_status padic_rmse(const double* a, const double* b, size_t n, double* out);

/* ---- plotting -------------------------------------------------------------------- */

/* Overlays up to two series (the second may be NULL). */
PADIC_API padic_status padic_svg_plot(const double* y1, size_t n1, const double* y2, size_t n2, const char* title,
                                      char** out);

#ifdef __cplusplus
}
#endif

#endif /* PADICLAB_H */
