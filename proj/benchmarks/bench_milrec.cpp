#include <benchmark/benchmark.h>

#include <cstddef>

#include "milrec/algebra_table.hpp"
#include "milrec/form_recovery.hpp"
#include "milrec/matrix.hpp"
#include "milrec/milnor.hpp"
#include "milrec/reconstruct.hpp"

namespace {

using namespace milrec;

// Deterministic dense matrix with mixed denominators, full rank for the
// sizes used here.
Matrix dense_matrix(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            long num = static_cast<long>((i * 7 + j * 3) % 11) - 5;
            long den = static_cast<long>((i + j) % 4) + 1;
            m.at(i, j) = Rational(num, den);
        }
        m.at(i, i) = m.at(i, i) + Rational(7);
    }
    return m;
}

Polynomial diagonal_quartic() {
    Polynomial q(3);
    q.add_term(Monomial({4, 0, 0}), Rational(1));
    q.add_term(Monomial({0, 4, 0}), Rational(1));
    q.add_term(Monomial({0, 0, 4}), Rational(1));
    return q;
}

void BM_rref(benchmark::State& state) {
    Matrix m = dense_matrix(static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(rref(m));
    }
}
BENCHMARK(BM_rref)->Arg(8)->Arg(16)->Arg(32);

void BM_quotient_build_cubic(benchmark::State& state) {
    PolyMap p = gradient_map(hesse_cubic(Rational(6)));
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_milnor_table(p));
    }
}
BENCHMARK(BM_quotient_build_cubic);

void BM_quotient_build_quartic(benchmark::State& state) {
    PolyMap p = gradient_map(diagonal_quartic());
    for (auto _ : state) {
        benchmark::DoNotOptimize(build_milnor_table(p));
    }
}
BENCHMARK(BM_quotient_build_quartic);

void BM_validate_table(benchmark::State& state) {
    AlgebraTable t = build_milnor_table(gradient_map(diagonal_quartic())).table;
    for (auto _ : state) {
        benchmark::DoNotOptimize(validate_table(t));
    }
}
BENCHMARK(BM_validate_table);

void BM_scramble(benchmark::State& state) {
    AlgebraTable t = build_milnor_table(gradient_map(hesse_cubic(Rational(6)))).table;
    for (auto _ : state) {
        benchmark::DoNotOptimize(scramble_table(t, 7));
    }
}
BENCHMARK(BM_scramble);

void BM_reconstruct(benchmark::State& state) {
    AlgebraTable t = build_milnor_table(gradient_map(hesse_cubic(Rational(6)))).table;
    AlgebraTable scrambled = scramble_table(t, 7);
    for (auto _ : state) {
        benchmark::DoNotOptimize(reconstruct_map(scrambled));
    }
}
BENCHMARK(BM_reconstruct);

void BM_recover_form(benchmark::State& state) {
    AlgebraTable t = build_milnor_table(gradient_map(hesse_cubic(Rational(6)))).table;
    ReconstructionReport report = reconstruct_map(scramble_table(t, 7));
    for (auto _ : state) {
        benchmark::DoNotOptimize(recover_form(report.phi));
    }
}
BENCHMARK(BM_recover_form);

void BM_roundtrip(benchmark::State& state) {
    Polynomial q = hesse_cubic(Rational(6));
    for (auto _ : state) {
        AlgebraTable t = build_milnor_table(gradient_map(q)).table;
        ReconstructionReport report = reconstruct_map(scramble_table(t, 7));
        FormRecovery rec = recover_form(report.phi);
        benchmark::DoNotOptimize(build_milnor_table(gradient_map(rec.form)));
    }
}
BENCHMARK(BM_roundtrip);

}  // namespace

BENCHMARK_MAIN();
