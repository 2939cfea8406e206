#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "toric/errors.hpp"
#include "toric/homology.hpp"
#include "toric/polytope.hpp"
#include "toric/simplicial_complex.hpp"

using namespace toric;

namespace {

SimplicialComplex cycle4() {
    return SimplicialComplex::from_maximal_faces({"1", "2", "3", "4"},
                                                 {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "1"}});
}

std::set<std::set<Label>> as_sets(const std::vector<std::vector<Label>>& faces) {
    std::set<std::set<Label>> out;
    for (const auto& f : faces) out.insert(std::set<Label>(f.begin(), f.end()));
    return out;
}

}  // namespace

TEST_CASE("from_maximal_faces basics") {
    SimplicialComplex boundary = SimplicialComplex::from_maximal_faces(
        {"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
    CHECK(boundary.vertex_count() == 3);
    CHECK(boundary.maximal_faces().size() == 3);
    CHECK(boundary.dimension() == 1);
    CHECK(boundary.same_faces_by_position(simplex_boundary(3)));

    SimplicialComplex ghost = SimplicialComplex::from_maximal_faces({"a"}, {});
    CHECK(ghost.vertex_count() == 1);
    CHECK(ghost.maximal_faces() == std::vector<FaceMask>{0});
    CHECK(ghost.dimension() == -1);
    CHECK(ghost.same_faces_by_position(simplex_boundary(1)));

    SimplicialComplex dropped =
        SimplicialComplex::from_maximal_faces({"a", "b"}, {{"a"}, {"a", "b"}});
    CHECK(dropped.maximal_faces().size() == 1);
    CHECK(dropped.face_labels(dropped.maximal_faces()[0]) == std::vector<Label>{"a", "b"});

    CHECK_THROWS_AS(SimplicialComplex::from_maximal_faces({"a"}, {{"z"}}), InputError);
    CHECK_THROWS_AS(SimplicialComplex::from_maximal_faces({"a", "a"}, {}), InputError);
}

TEST_CASE("minimal non-faces") {
    SimplicialComplex two_points = simplex_boundary(2);
    CHECK(as_sets(minimal_non_faces(two_points)) == std::set<std::set<Label>>{{"1", "2"}});

    CHECK(as_sets(minimal_non_faces(simplex_boundary(3))) ==
          std::set<std::set<Label>>{{"1", "2", "3"}});

    // Frozen from the brute-force subset oracle.
    SimplicialComplex square = cycle4();
    CHECK(as_sets(minimal_non_faces(square)) == std::set<std::set<Label>>{{"1", "3"}, {"2", "4"}});
    auto brute = oracles::brute_minimal_non_faces(square);
    CHECK(as_sets(minimal_non_faces(square)) ==
          std::set<std::set<Label>>(brute.begin(), brute.end()));
}

TEST_CASE("complex_from_minimal_non_faces") {
    CHECK(SimplicialComplex::from_minimal_non_faces({"1", "2", "3"}, {{"1", "2", "3"}})
              .same_faces_by_position(simplex_boundary(3)));

    SimplicialComplex square =
        SimplicialComplex::from_minimal_non_faces({"1", "2", "3", "4"}, {{"1", "3"}, {"2", "4"}});
    CHECK(square == cycle4());

    // Cross-check the face set against the brute-force subset filter.
    auto faces = oracles::brute_faces_from_mnfs({"1", "2", "3", "4"},
                                                {{"1", "3"}, {"2", "4"}});
    for (const auto& f : faces)
        CHECK(square.is_face(square.mask_from_labels(std::vector<Label>(f.begin(), f.end()))));
    CHECK(square.all_face_masks().size() == faces.size());

    CHECK(SimplicialComplex::from_minimal_non_faces({"1", "2"}, {}).same_faces_by_position(
        full_simplex(2)));

    CHECK_THROWS_AS(
        SimplicialComplex::from_minimal_non_faces({"1", "2"}, {{"1"}, {"1", "2"}}),
        InputError);
    CHECK_THROWS_AS(SimplicialComplex::from_minimal_non_faces({"1"}, {{}}), InputError);
}

TEST_CASE("round trip vertices+mnfs is the identity, exhaustively to 5 vertices") {
    for (int v = 1; v <= 5; ++v) {
        for (const SimplicialComplex& K : oracles::enumerate_all_complexes(v)) {
            SimplicialComplex back = SimplicialComplex::from_minimal_non_faces(
                K.vertex_labels(), minimal_non_faces(K));
            CHECK(back == K);
        }
    }
}

TEST_CASE("round trip randomized beyond 5 vertices") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 150; ++trial) {
        SimplicialComplex K = oracles::random_complex(rng, 6 + trial % 3);
        SimplicialComplex back =
            SimplicialComplex::from_minimal_non_faces(K.vertex_labels(), minimal_non_faces(K));
        CHECK(back == K);
    }
}

TEST_CASE("join") {
    SimplicialComplex point = full_simplex(1);
    SimplicialComplex edge = join(point, point.relabeled({"p"}));
    CHECK(edge.same_faces_by_position(full_simplex(2)));

    SimplicialComplex square = join(simplex_boundary(2).relabeled({"a", "b"}),
                                    simplex_boundary(2).relabeled({"c", "d"}));
    CHECK(as_sets(minimal_non_faces(square)) == std::set<std::set<Label>>{{"a", "b"}, {"c", "d"}});
    CHECK(square.same_faces_by_position(
        SimplicialComplex::from_maximal_faces({"a", "b", "c", "d"},
                                              {{"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}})));

    // Joining with {∅} only adds its ghost vertices.
    SimplicialComplex ghosted = join(cycle4().relabeled({"a", "b", "c", "d"}), simplex_boundary(1));
    CHECK(ghosted.vertex_count() == 5);
    CHECK(ghosted.maximal_faces() == cycle4().maximal_faces());

    CHECK_THROWS_AS(join(point, point), InputError);
}

TEST_CASE("join multiplies f-polynomials") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        SimplicialComplex K = oracles::random_complex(rng, 4);
        SimplicialComplex L = oracles::random_complex(rng, 3).relabeled({"x", "y", "z"});
        FVector fk = f_vector(K), fl = f_vector(L), fj = f_vector(join(K, L));
        std::vector<long long> product(fk.counts.size() + fl.counts.size() - 1, 0);
        for (std::size_t a = 0; a < fk.counts.size(); ++a)
            for (std::size_t b = 0; b < fl.counts.size(); ++b)
                product[a + b] += fk.counts[a] * fl.counts[b];
        product.resize(fj.counts.size(), 0);
        CHECK(fj.counts == product);
    }
}

TEST_CASE("full subcomplex") {
    SimplicialComplex empty = full_subcomplex(cycle4(), {});
    CHECK(empty.vertex_count() == 0);
    CHECK(empty.maximal_faces() == std::vector<FaceMask>{0});

    SimplicialComplex opposite = full_subcomplex(cycle4(), {"1", "3"});
    CHECK(opposite.vertex_count() == 2);
    CHECK(opposite.same_faces_by_position(simplex_boundary(2)));

    SimplicialComplex edge = full_subcomplex(simplex_boundary(3), {"1", "2"});
    CHECK(edge.same_faces_by_position(full_simplex(2)));
}

TEST_CASE("simplex boundaries") {
    CHECK(simplex_boundary(2).maximal_faces() == std::vector<FaceMask>({1, 2}));
    CHECK(simplex_boundary(1).maximal_faces() == std::vector<FaceMask>{0});
    CHECK(simplex_boundary(3).dimension() == 1);
    CHECK(simplex_boundary(3).maximal_faces().size() == 3);
    CHECK_THROWS_AS(simplex_boundary(0), InputError);
    CHECK_THROWS_AS(full_simplex(0), InputError);
}

TEST_CASE("nerve of simple polytopes") {
    SimplePolytopeCombinatorics segment(1, {"F1", "F2"}, {{"F1"}, {"F2"}});
    CHECK(nerve_of_simple_polytope(segment).same_faces_by_position(simplex_boundary(2)));

    SimplePolytopeCombinatorics square(
        2, {"F1", "F2", "F3", "F4"},
        {{"F1", "F2"}, {"F2", "F3"}, {"F3", "F4"}, {"F4", "F1"}});
    SimplicialComplex nerve = nerve_of_simple_polytope(square);
    CHECK(nerve.same_faces_by_position(cycle4()));
    CHECK(nerve.is_pure());
    CHECK(nerve.dimension() == 1);
    CHECK(nerve.maximal_faces().size() == square.polytope_vertices().size());

    SimplePolytopeCombinatorics triangle(2, {"F1", "F2", "F3"},
                                         {{"F1", "F2"}, {"F2", "F3"}, {"F1", "F3"}});
    CHECK(nerve_of_simple_polytope(triangle).same_faces_by_position(simplex_boundary(3)));

    CHECK_THROWS_AS(SimplePolytopeCombinatorics(2, {"F1", "F2"}, {{"F1"}}), InputError);
    CHECK_THROWS_AS(SimplePolytopeCombinatorics(1, {"F1", "F2"}, {{"F1"}}), InputError);
    CHECK_THROWS_AS(
        SimplePolytopeCombinatorics(1, {"F1", "F2"}, {{"F1"}, {"F1"}, {"F2"}}), InputError);
}

TEST_CASE("f and h vectors") {
    CHECK(f_vector(simplex_boundary(3)).counts == std::vector<long long>{1, 3, 3});
    CHECK(h_vector(simplex_boundary(3), 2).counts == std::vector<long long>{1, 1, 1});

    CHECK(f_vector(cycle4()).counts == std::vector<long long>{1, 4, 4});
    CHECK(h_vector(cycle4(), 2).counts == std::vector<long long>{1, 2, 1});

    SimplicialComplex point = full_simplex(1);
    CHECK(f_vector(point).counts == std::vector<long long>{1, 1});
    CHECK(h_vector(point, 1).counts == std::vector<long long>{1, 0});

    SimplicialComplex non_pure =
        SimplicialComplex::from_maximal_faces({"1", "2", "3"}, {{"1", "2"}, {"3"}});
    CHECK_THROWS_AS(h_vector(non_pure, 2), InputError);
}

TEST_CASE("h vector agrees with the binomial formula") {
    std::mt19937 rng(99);
    int done = 0;
    while (done < 60) {
        SimplicialComplex K = oracles::random_complex(rng, 5);
        int n = K.dimension() + 1;
        if (!K.is_pure()) continue;
        ++done;
        CHECK(h_vector(K, n).counts == oracles::binomial_h_vector(f_vector(K), n));
    }
}

TEST_CASE("euler characteristic matches the homology oracle") {
    std::mt19937 rng(123);
    for (int trial = 0; trial < 40; ++trial) {
        SimplicialComplex K = oracles::random_complex(rng, 5);
        BettiTable h = reduced_homology(K);
        long long reduced_chi = 0;
        for (const auto& [deg, r] : h.ranks) reduced_chi += (deg % 2 == 0 ? 1 : -1) * r;
        CHECK(euler_characteristic(f_vector(K)) - 1 == reduced_chi);
    }
}
