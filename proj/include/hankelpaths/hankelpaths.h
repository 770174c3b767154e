#ifndef HANKELPATHS_H
#define HANKELPATHS_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(HP_BUILDING_LIBRARY)
#    define HP_API __declspec(dllexport)
#  else
#    define HP_API __declspec(dllimport)
#  endif
#else
#  define HP_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum hp_status {
    HP_OK = 0,
    HP_INVALID_ARGUMENT = 1,
    HP_BUDGET_EXCEEDED = 2,
    HP_NOT_SURVIVOR = 3,
    HP_RENDER_TOO_LARGE = 4,
    HP_OUT_OF_RANGE = 5,
    HP_INTERNAL_ERROR = 6
} hp_status;

typedef enum hp_parity { HP_EVEN = 0, HP_ODD = 1 } hp_parity;
typedef enum hp_side { HP_LHS = 0, HP_RHS = 1 } hp_side;
typedef enum hp_format { HP_JSON = 0, HP_CSV = 1 } hp_format;

typedef enum hp_render_kind {
    HP_RENDER_SURVIVOR = 0, /* a nonintersecting tuple of the instance's side */
    HP_RENDER_OVERLAY = 1,  /* folded overlay of an lhs survivor */
    HP_RENDER_FOLDED = 2    /* folded survivor (psi-fixed), with strips and red paths */
} hp_render_kind;

HP_API const char* hp_status_string(hp_status s);

/* Message of the last failing call on this thread; never NULL. */
HP_API const char* hp_last_error(void);

/* Every char* handed out by the library is released with this. */
HP_API void hp_string_free(char* s);

/* Exact integers come back as decimal strings. */
HP_API hp_status hp_binomial(long n, long r, char** out);
HP_API hp_status hp_catalan_convolution(int K, long p, char** out);
HP_API hp_status hp_hankel_det(int K, long M, int N, char** out);

typedef struct hp_instance hp_instance;

HP_API hp_status hp_instance_create(int k, int m, int n, hp_parity parity, hp_side side, hp_instance** out);
HP_API void hp_instance_destroy(hp_instance* inst);
HP_API hp_status hp_instance_params(const hp_instance* inst, int* K, long* M, int* N);

typedef struct hp_verify_options {
    unsigned long long tuple_gate;      /* all-tuple routes run up to this many tuples */
    unsigned long long survivor_budget; /* per side */
    int timing;
    unsigned threads;                   /* 0: hardware concurrency */
    int inject_fault;                   /* perturbs the rhs determinant, for testing */
} hp_verify_options;

HP_API void hp_verify_options_default(hp_verify_options* opt);

typedef struct hp_grid {
    int k_min, k_max;
    int m_min, m_max;
    int n_min, n_max;
    unsigned parity_mask; /* bit 0: even, bit 1: odd */
} hp_grid;

typedef struct hp_report hp_report;

HP_API hp_status hp_verify(const hp_grid* grid, const hp_verify_options* opt, hp_report** out);
HP_API int hp_report_passed(const hp_report* r);
HP_API size_t hp_report_instances(const hp_report* r);
HP_API hp_status hp_report_render(const hp_report* r, hp_format format, char** out);
HP_API void hp_report_destroy(hp_report* r);

/* psi/xi route on one instance (either side accepted); JSON record in *json. */
HP_API hp_status hp_bijection_check(const hp_instance* inst, const hp_verify_options* opt, int* passed, char** json);

/* Survivors of the instance's side as JSON; at most max_listed are spelled out. */
HP_API hp_status hp_enumerate(const hp_instance* inst, unsigned long long budget, size_t max_listed, char** json);

HP_API hp_status hp_render_svg(const hp_instance* inst, hp_render_kind kind, size_t index, unsigned long long budget,
                               char** svg);

#ifdef __cplusplus
}
#endif

#endif
