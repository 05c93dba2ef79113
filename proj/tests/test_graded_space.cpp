#include "doctest.h"

#include "coda/multiindex.hpp"

#include <algorithm>
#include <set>

using namespace coda;

namespace {

// Independent oracle: expand w_J into a list of labeled generators and
// enumerate subsets of positions directly.
Int count_labeled_unshuffles(const MultiIndex& J, const MultiIndex& K) {
    std::vector<int> gens;
    for (int i = 0; i < J.i1; ++i)
        gens.push_back(1);
    for (int i = 0; i < J.i2; ++i)
        gens.push_back(2);
    for (int i = 0; i < J.i3; ++i)
        gens.push_back(3);
    int n = K.weight();
    Int count = 0;
    std::vector<int> idx(gens.size(), 0);
    // iterate over all bitmasks with |gens| <= 12 here
    for (unsigned long mask = 0; mask < (1ul << gens.size()); ++mask) {
        if (__builtin_popcountl(mask) != n)
            continue;
        int c1 = 0, c2 = 0, c3 = 0;
        for (size_t i = 0; i < gens.size(); ++i)
            if (mask & (1ul << i)) {
                if (gens[i] == 1) ++c1;
                if (gens[i] == 2) ++c2;
                if (gens[i] == 3) ++c3;
            }
        if (c1 == K.i1 && c2 == K.i2 && c3 == K.i3)
            ++count;
    }
    return count;
}

}  // namespace

TEST_CASE("monomial bases have the published shape") {
    auto b1 = enumerate_monomials(1);
    CHECK(b1.even == std::vector<MultiIndex>{{0, 0, 1}, {0, 1, 0}});
    CHECK(b1.odd == std::vector<MultiIndex>{{1, 0, 0}});

    auto b2 = enumerate_monomials(2);
    CHECK(b2.even.size() == 3);
    CHECK(b2.odd.size() == 2);

    auto b5 = enumerate_monomials(5);
    CHECK(b5.even.size() == 6);
    CHECK(b5.odd.size() == 5);

    for (int n = 1; n <= 20; ++n) {
        auto b = enumerate_monomials(n);
        CHECK(b.even.size() == static_cast<size_t>(n + 1));
        CHECK(b.odd.size() == static_cast<size_t>(n));
    }
    CHECK_THROWS_AS(enumerate_monomials(0), OutOfRangeError);
}

TEST_CASE("enumeration order is ascending in the middle index") {
    auto b = enumerate_monomials(4);
    for (size_t i = 1; i < b.even.size(); ++i)
        CHECK(b.even[i - 1].i2 < b.even[i].i2);
    for (size_t i = 1; i < b.odd.size(); ++i)
        CHECK(b.odd[i - 1].i2 < b.odd[i].i2);
}

TEST_CASE("multi-index factorial") {
    CHECK(multiindex_factorial(MultiIndex(0, 2, 0)) == 2);
    CHECK(multiindex_factorial(MultiIndex(1, 0, 0)) == 1);
    CHECK(multiindex_factorial(MultiIndex(1, 3, 2)) == 12);
}

TEST_CASE("split_monomial enumerates unshuffles with multiplicities") {
    auto splits = split_monomial(MultiIndex(0, 2, 1), 1);
    REQUIRE(splits.size() == 2);
    // (inner w2, outer w2 w3, mult 2) and (inner w3, outer w2^2, mult 1)
    std::map<MultiIndex, Int> mult;
    for (const auto& s : splits) {
        CHECK(s.sign == 1);
        CHECK(s.inner.i1 + s.outer.i1 == 0);
        CHECK(s.inner.i2 + s.outer.i2 == 2);
        CHECK(s.inner.i3 + s.outer.i3 == 1);
        mult[s.inner] = s.multiplicity;
    }
    CHECK(mult[MultiIndex(0, 1, 0)] == 2);
    CHECK(mult[MultiIndex(0, 0, 1)] == 1);

    auto full = split_monomial(MultiIndex(1, 1, 0), 2);
    REQUIRE(full.size() == 1);
    CHECK(full[0].inner == MultiIndex(1, 1, 0));
    CHECK(full[0].outer == MultiIndex(0, 0, 0));
    CHECK(full[0].multiplicity == 1);

    auto empty_inner = split_monomial(MultiIndex(0, 3, 0), 0);
    REQUIRE(empty_inner.size() == 1);
    CHECK(empty_inner[0].inner == MultiIndex(0, 0, 0));
    CHECK(empty_inner[0].outer == MultiIndex(0, 3, 0));

    CHECK(split_monomial(MultiIndex(0, 1, 1), 3).empty());
}

TEST_CASE("multiplicities agree with labeled-unshuffle enumeration") {
    std::vector<MultiIndex> samples;
    for (int i1 = 0; i1 <= 1; ++i1)
        for (int i2 = 0; i2 <= 5; ++i2)
            for (int i3 = 0; i3 <= 5; ++i3)
                if (i1 + i2 + i3 >= 1 && i1 + i2 + i3 <= 8)
                    samples.emplace_back(i1, i2, i3);
    for (const auto& J : samples) {
        for (int n = 0; n <= J.weight(); ++n) {
            Int total = 0;
            for (const auto& s : split_monomial(J, n)) {
                CHECK(s.multiplicity == count_labeled_unshuffles(J, s.inner));
                total += s.multiplicity;
            }
            CHECK(total == binomial(J.weight(), n));
        }
    }
}

TEST_CASE("splits are involutive in the two roles") {
    MultiIndex J(1, 3, 2);
    for (int n = 0; n <= J.weight(); ++n) {
        auto lhs = split_monomial(J, n);
        auto rhs = split_monomial(J, J.weight() - n);
        for (const auto& s : lhs) {
            bool found = false;
            for (const auto& t : rhs)
                if (t.inner == s.outer && t.outer == s.inner &&
                    t.multiplicity == s.multiplicity)
                    found = true;
            CHECK(found);
        }
    }
}

TEST_CASE("monomial text form") {
    CHECK(MultiIndex(1, 2, 3).str() == "w1 w2^2 w3^3");
    CHECK(MultiIndex(0, 1, 0).str() == "w2");
    CHECK(MultiIndex(0, 0, 0).str() == "1");
}
