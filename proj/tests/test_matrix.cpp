#include "doctest.h"

#include "affclass/errors.hpp"
#include "affclass/matrix.hpp"
#include "affclass/random_source.hpp"
#include "affclass/rational.hpp"

using namespace affclass;

namespace {

QMatrix random_matrix(RandomSource& rng, std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            m(i, j) = rng.rat();
        }
    }
    return m;
}

} // namespace

TEST_CASE("rational parsing and formatting") {
    CHECK(rat_parse("3") == Rat(3));
    CHECK(rat_parse("-5/2") == ratio(-5, 2));
    CHECK(rat_parse("4/6") == ratio(2, 3)); // canonicalized
    CHECK(rat_str(ratio(-5, 2)) == "-5/2");
    CHECK(rat_str(Rat(7)) == "7");
    CHECK(rat_str(ratio(4, 6)) == "2/3");
    CHECK_THROWS_AS(rat_parse("1/0"), ParseError);
    CHECK_THROWS_AS(rat_parse(""), ParseError);
    CHECK_THROWS_AS(rat_parse("a/b"), ParseError);
    CHECK_THROWS_AS(rat_parse("1.5"), ParseError);
    CHECK_THROWS_AS(ratio(1, 0), BadParameter);
}

TEST_CASE("rref: rank-1 collapse") {
    const QMatrix m{{Rat(2), Rat(4)}, {Rat(1), Rat(2)}};
    const RrefResult r = rref(m);
    CHECK(r.matrix == QMatrix{{Rat(1), Rat(2)}, {Rat(0), Rat(0)}});
    CHECK(r.pivots == std::vector<std::size_t>{0});
}

TEST_CASE("rref: identity and zero") {
    const QMatrix id3 = QMatrix::identity(3);
    const RrefResult r = rref(id3);
    CHECK(r.matrix == id3);
    CHECK(r.pivots == std::vector<std::size_t>{0, 1, 2});

    const QMatrix zero(2, 3);
    const RrefResult z = rref(zero);
    CHECK(z.matrix == zero);
    CHECK(z.pivots.empty());
}

TEST_CASE("nullspace: conventions and edge cases") {
    // Single relation x + y = 0 -> basis {(-1, 1)}.
    const QMatrix m{{Rat(1), Rat(1)}};
    const auto basis = nullspace(m);
    REQUIRE(basis.size() == 1);
    CHECK(basis[0] == QMatrix{{Rat(-1)}, {Rat(1)}});

    CHECK(nullspace(QMatrix::identity(2)).empty());

    const auto full = nullspace(QMatrix(2, 2));
    REQUIRE(full.size() == 2);
    CHECK(full[0] == QMatrix{{Rat(1)}, {Rat(0)}});
    CHECK(full[1] == QMatrix{{Rat(0)}, {Rat(1)}});
}

TEST_CASE("nullspace vectors are exact kernel elements with complementary rank") {
    RandomSource rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        QMatrix m(3, 4);
        for (std::size_t i = 0; i < 3; ++i) {
            for (std::size_t j = 0; j < 4; ++j) {
                m(i, j) = rng.rat();
            }
        }
        const auto basis = nullspace(m);
        CHECK(rank(m) + basis.size() == 4);
        for (const QMatrix& v : basis) {
            CHECK((m * v).is_zero());
        }
    }
}

TEST_CASE("inverse: exact values and failure") {
    CHECK(inverse(QMatrix::identity(3)) == QMatrix::identity(3));
    const QMatrix d{{Rat(2), Rat(0)}, {Rat(0), Rat(4)}};
    CHECK(inverse(d) == QMatrix{{ratio(1, 2), Rat(0)}, {Rat(0), ratio(1, 4)}});
    CHECK_THROWS_AS(inverse(QMatrix{{Rat(1), Rat(1)}, {Rat(1), Rat(1)}}), SingularMatrix);
}

TEST_CASE("inverse round trip on random invertible matrices") {
    RandomSource rng(23);
    int done = 0;
    while (done < 25) {
        const QMatrix m = random_matrix(rng, 3);
        if (det(m) == 0) {
            continue;
        }
        const QMatrix inv = inverse(m);
        CHECK(m * inv == QMatrix::identity(3));
        CHECK(inverse(inv) == m);
        ++done;
    }
}

TEST_CASE("det: multiplicativity and singularity") {
    RandomSource rng(31);
    for (int trial = 0; trial < 20; ++trial) {
        const QMatrix a = random_matrix(rng, 3);
        const QMatrix b = random_matrix(rng, 3);
        CHECK(det(a * b) == det(a) * det(b));
    }
    CHECK(det(QMatrix{{Rat(1), Rat(1)}, {Rat(1), Rat(1)}}) == Rat(0));
    CHECK(det(QMatrix::identity(4)) == Rat(1));
}

TEST_CASE("solve: consistent, inconsistent, underdetermined") {
    const QMatrix a{{Rat(2), Rat(0)}, {Rat(0), Rat(4)}};
    const auto x = solve(a, Vec{Rat(6), Rat(8)});
    REQUIRE(x.has_value());
    CHECK(*x == Vec{Rat(3), Rat(2)});

    // x + y = 1 twice over is inconsistent with x + y = 2.
    const QMatrix bad{{Rat(1), Rat(1)}, {Rat(1), Rat(1)}};
    CHECK_FALSE(solve(bad, Vec{Rat(1), Rat(2)}).has_value());

    // Underdetermined: free variables are set to zero.
    const QMatrix wide{{Rat(1), Rat(1)}};
    const auto y = solve(wide, Vec{Rat(5)});
    REQUIRE(y.has_value());
    CHECK(*y == Vec{Rat(5), Rat(0)});
}

TEST_CASE("matrix arithmetic sanity") {
    const QMatrix a{{Rat(1), Rat(2)}, {Rat(3), Rat(4)}};
    CHECK(a.transpose().transpose() == a);
    CHECK(a + QMatrix(2, 2) == a);
    CHECK(a - a == QMatrix(2, 2));
    CHECK(a * QMatrix::identity(2) == a);
    CHECK(a * Vec{Rat(1), Rat(0)} == Vec{Rat(1), Rat(3)});
    CHECK(Rat(2) * a == a + a);
    CHECK(column(Vec{Rat(1), Rat(2)}) == QMatrix{{Rat(1)}, {Rat(2)}});
    CHECK_THROWS_AS(a * QMatrix::identity(3), DimensionMismatch);
}

TEST_CASE("vector helpers") {
    const Vec a{Rat(1), Rat(2)};
    const Vec b{Rat(3), Rat(-2)};
    CHECK(vec_add(a, b) == Vec{Rat(4), Rat(0)});
    CHECK(vec_sub(a, b) == Vec{Rat(-2), Rat(4)});
    CHECK(vec_scale(Rat(3), a) == Vec{Rat(3), Rat(6)});
    CHECK(vec_is_zero(vec_zero(4)));
    CHECK_FALSE(vec_is_zero(a));
    CHECK(vec_str(b) == std::vector<std::string>{"3", "-2"});
    CHECK_THROWS_AS(vec_add(a, vec_zero(3)), DimensionMismatch);
}

TEST_CASE("random source is deterministic per seed and respects domains") {
    RandomSource a(99);
    RandomSource b(99);
    for (int i = 0; i < 50; ++i) {
        CHECK(a.next_u64() == b.next_u64());
    }
    RandomSource rng(5);
    for (int i = 0; i < 200; ++i) {
        const Rat q = rng.rat();
        CHECK(q.get_num() >= -10);
        CHECK(q.get_num() <= 10);
        CHECK(rng.nonzero_rat() != 0);
        CHECK(rng.positive_rat() > 0);
        CHECK(rng.rat_excluding({Rat(0), Rat(1)}) != 0);
        const long v = rng.int_in(-3, 3);
        CHECK(v >= -3);
        CHECK(v <= 3);
    }
}
