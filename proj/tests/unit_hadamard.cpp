#include <doctest.h>

#include <map>
#include <set>

#include "stacklab/hadamard.hpp"
#include "test_support.hpp"

using namespace stacklab;

TEST_CASE("sylvester construction") {
    HadamardMatrix h1 = sylvester(1);
    CHECK(h1.order() == 1);
    CHECK(h1.at(0, 0) == 1);
    CHECK(validate_hadamard(h1));

    HadamardMatrix h2 = sylvester(2);
    CHECK(h2.at(0, 0) == 1);
    CHECK(h2.at(0, 1) == 1);
    CHECK(h2.at(1, 0) == 1);
    CHECK(h2.at(1, 1) == -1);

    for (int p : {2, 4, 8, 16}) CHECK(validate_hadamard(sylvester(p)));
    CHECK_THROWS_AS(sylvester(6), std::invalid_argument);
    CHECK_THROWS_AS(sylvester(0), std::invalid_argument);
}

TEST_CASE("paley construction") {
    for (int q : {3, 7, 11, 19, 23}) {
        HadamardMatrix h = paley(q);
        CHECK(h.order() == q + 1);
        CHECK(validate_hadamard(h));
    }
    CHECK_THROWS_AS(paley(5), std::invalid_argument);   // 5 = 1 (mod 4)
    CHECK_THROWS_AS(paley(15), std::invalid_argument);  // not prime
}

TEST_CASE("validate rejects non-hadamard") {
    HadamardMatrix all_ones(2, {1, 1, 1, 1});
    CHECK_FALSE(validate_hadamard(all_ones));
}

TEST_CASE("normalization flip set is stable") {
    // sylvester(2): row 1 ends at +1, row 2 at -1, so exactly row 2 flips.
    std::vector<int> flipped;
    HadamardMatrix n2 = normalize_last_column(sylvester(2), &flipped);
    CHECK(flipped == std::vector<int>{1});
    CHECK(n2.normalized());
    CHECK(validate_hadamard(n2));
    // Idempotent.
    std::vector<int> again;
    HadamardMatrix n2b = normalize_last_column(n2, &again);
    CHECK(again.empty());
    CHECK(n2b == n2);

    // sylvester(4) rows are ++++, +-+-, ++--, +--+; rows 1 and 2 end in -1.
    std::vector<int> f4;
    normalize_last_column(sylvester(4), &f4);
    CHECK(f4 == std::vector<int>{1, 2});
}

TEST_CASE("reference order-4 matrix is valid and normalized") {
    HadamardMatrix h = reference_order4();
    CHECK(validate_hadamard(h));
    CHECK(h.normalized());
}

TEST_CASE("permutation family formulas") {
    PermutationFamily f(reference_order4(), 2);
    CHECK(f.n() == 8);
    // pi_1 is the identity (all +1 row), pi_2 from the digit-flip formula.
    CHECK(f.values(1) == std::vector<std::int64_t>{1, 2, 3, 4, 5, 6, 7, 8});
    CHECK(f.values(2) == std::vector<std::int64_t>{4, 3, 2, 1, 8, 7, 6, 5});
    for (int k = 1; k <= 4; ++k) {
        for (std::int64_t i = 1; i <= f.n(); ++i)
            CHECK(f.apply_inverse(k, f.apply(k, i)) == i);
    }

    // m = 1 collapses everything to the identity on {1}.
    PermutationFamily unit(reference_order4(), 1);
    CHECK(unit.n() == 1);
    for (int k = 1; k <= 4; ++k) CHECK(unit.apply(k, 1) == 1);

    CHECK_THROWS_AS(PermutationFamily(sylvester(4), 2), std::invalid_argument);
}

TEST_CASE("bijectivity for all small families") {
    for (int p : {2, 4}) {
        HadamardMatrix h = normalize_last_column(p == 4 ? reference_order4() : sylvester(p));
        for (int m = 1; m <= 6; ++m) {
            PermutationFamily f(h, m);
            for (int k = 1; k <= p; ++k) {
                std::vector<bool> hit(static_cast<std::size_t>(f.n()), false);
                for (std::int64_t i = 1; i <= f.n(); ++i) {
                    std::int64_t v = f.apply(k, i);
                    CHECK(!hit[static_cast<std::size_t>(v - 1)]);
                    hit[static_cast<std::size_t>(v - 1)] = true;
                }
            }
        }
    }
}

TEST_CASE("sum sets satisfy the (2p-1)m^{p/2-1} bound") {
    for (int m = 2; m <= 6; ++m) {
        PermutationFamily f(reference_order4(), m);
        for (int k = 1; k <= 4; ++k)
            for (int l = 1; l <= 4; ++l) {
                if (k == l) continue;
                SumSetAnalysis a = sum_set(f, k, l);
                CHECK(a.values.size() <= static_cast<std::size_t>(7 * m));
                CHECK(a.a_plus.size() == 1);
                CHECK(a.a_minus.size() == 2);
                // Diagonal-only subset is at most m^{p/2-1}.
                std::set<std::int64_t> diag;
                for (std::int64_t i = 1; i <= f.n(); ++i)
                    diag.insert(f.apply(k, i) + f.apply(l, i));
                CHECK(diag.size() <= static_cast<std::size_t>(m));
            }
    }
    // p = 2: bound is 3 for every m.
    for (int m = 2; m <= 6; ++m) {
        PermutationFamily f(normalize_last_column(sylvester(2)), m);
        CHECK(sum_set(f, 1, 2).values.size() <= 3);
    }
    PermutationFamily f2(reference_order4(), 2);
    CHECK_THROWS_AS(sum_set(f2, 2, 2), std::invalid_argument);
}

TEST_CASE("opposite-entry digit identity") {
    for (int m = 2; m <= 5; ++m) {
        PermutationFamily f(reference_order4(), m);
        for (int k = 1; k <= 4; ++k)
            for (int l = k + 1; l <= 4; ++l) {
                SumSetAnalysis a = sum_set(f, k, l);
                for (int pos : a.a_minus) {
                    for (std::int64_t i = 1; i <= f.n(); ++i) {
                        std::int64_t r = i - 1;
                        for (int q = 0; q < pos; ++q) r /= m;
                        int digit = static_cast<int>(r % m);
                        int dk = f.source().at(k - 1, pos) == -1 ? m - 1 - digit : digit;
                        int dl = f.source().at(l - 1, pos) == -1 ? m - 1 - digit : digit;
                        CHECK(dk + dl == m - 1);
                    }
                }
            }
    }
}

TEST_CASE("path layouts under the permutations validate") {
    for (int m = 2; m <= 4; ++m) {
        PermutationFamily f(reference_order4(), m);
        for (int k = 1; k <= 4; ++k) {
            StackLayout l = path_layout_under_permutation(f, k);
            CHECK(l.pages <= 5);
            Graph p = path(static_cast<Vertex>(f.n()));
            LayoutReport rep = validate_stack_layout(p, l);
            CHECK(rep.valid);
            // The split stacks hold mutually non-nesting edges as well.
            QueueLayout q{l.order, l.page, l.pages};
            LayoutReport qrep = validate_queue_layout(p, q);
            for (std::int32_t pg = 2; pg <= l.pages; ++pg)
                CHECK(qrep.per_page_violations[static_cast<std::size_t>(pg - 1)] == 0);
        }
    }
    // p = 2 gives the single-stack reversal layout.
    PermutationFamily f2(normalize_last_column(sylvester(2)), 5);
    for (int k = 1; k <= 2; ++k) {
        StackLayout l = path_layout_under_permutation(f2, k);
        CHECK(l.pages == 1);
        CHECK(validate_stack_layout(path(5), l).valid);
    }
}

TEST_CASE("lcs of the reference family") {
    PermutationFamily f(reference_order4(), 2);
    for (int k = 1; k <= 4; ++k)
        for (int l = 1; l <= 4; ++l) {
            if (k == l)
                CHECK(lcs(f, k, l) == 8);
            else
                CHECK(lcs(f, k, l) <= 2);
        }
    // Exact values for m = 3, frozen from the digit-flip construction.
    PermutationFamily f3(reference_order4(), 3);
    std::map<std::pair<int, int>, std::int64_t> got;
    for (int k = 1; k <= 4; ++k)
        for (int l = k + 1; l <= 4; ++l) got[{k, l}] = lcs(f3, k, l);
    for (auto [pair, value] : got) CHECK(value <= 21);
}

TEST_CASE("hadamard text round trip") {
    for (const HadamardMatrix& h : {sylvester(4), paley(7), reference_order4()}) {
        std::string text = hadamard_to_string(h);
        CHECK(hadamard_from_string(text) == h);
        CHECK(hadamard_to_string(hadamard_from_string(text)) == text);
    }
    PermutationFamily f(reference_order4(), 2);
    CHECK(permutation_to_string(f, 2) == "perm 8\n4 3 2 1 8 7 6 5\n");
}
