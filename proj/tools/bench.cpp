// Compares the OpenMP kernels against their serial reference implementations:
// the Hochster subset sum and the all-faces regularity sweep.

#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include <chrono>

#include "toric/characteristic.hpp"
#include "toric/constructions.hpp"
#include "toric/homology.hpp"
#include "toric/polytope.hpp"
#include "toric/simplicial_complex.hpp"

using namespace toric;

namespace {

double seconds(std::chrono::steady_clock::time_point a, std::chrono::steady_clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

SimplicialComplex polygon_nerve(int m) {
    std::vector<Label> facets;
    std::vector<std::vector<Label>> vertices;
    for (int i = 0; i < m; ++i) facets.push_back("F" + std::to_string(i + 1));
    for (int i = 0; i < m; ++i) vertices.push_back({facets[i], facets[(i + 1) % m]});
    return nerve_of_simple_polytope(SimplePolytopeCombinatorics(2, facets, vertices));
}

template <typename F>
double time_once(F&& f) {
    auto a = std::chrono::steady_clock::now();
    f();
    auto b = std::chrono::steady_clock::now();
    return seconds(a, b);
}

void report(const char* name, double serial_s, double parallel_s, bool equal) {
    std::printf("%-34s %10.3f ms %10.3f ms   x%.2f   %s\n", name, serial_s * 1e3, parallel_s * 1e3,
                parallel_s > 0 ? serial_s / parallel_s : 0.0, equal ? "outputs equal" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
    std::printf("OpenMP disabled; both columns run the same serial code\n");
#endif
    std::printf("%-34s %13s %13s\n", "kernel", "serial", "parallel");

    for (int m : {10, 12, 14}) {
        SimplicialComplex K = polygon_nerve(m);
        BettiTable serial_out, parallel_out;
        double s = time_once([&] { serial_out = hochster_betti_serial(K, m); });
        double p = time_once([&] { parallel_out = hochster_betti(K, m); });
        std::string name = "hochster_betti " + std::to_string(m) + "-gon nerve";
        report(name.c_str(), s, p, serial_out == parallel_out);
    }

    {
        // Regularity of the wedge of a square by J = (3,3,3,3): 4096 faces.
        SimplicialComplex square = polygon_nerve(4);
        CharacteristicMatrix lambda = CharacteristicMatrix::create(
            IntMatrix::from_rows({{1, 0, -1, 1}, {0, 1, 0, -1}}), square.vertex_labels());
        JSequence J({3, 3, 3, 3});
        SimplicialComplex KJ = simplicial_wedge(square, J);
        CharacteristicMatrix lamJ = build_lambda_J(lambda, J);
        RegularityReport serial_out, parallel_out;
        double s = time_once(
            [&] { serial_out = check_regularity_serial(KJ, lamJ, RegularityMode::AllFaces); });
        double p = time_once([&] { parallel_out = check_regularity(KJ, lamJ, RegularityMode::AllFaces); });
        report("check_regularity square J=(3^4)", s, p, serial_out == parallel_out);
    }
    return 0;
}
