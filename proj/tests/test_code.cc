// Copyright 2026 The cvstab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <random>

#include "cvstab/catalog.hpp"
#include "cvstab/code.hpp"
#include "cvstab/code_format.hpp"
#include "oracle.hpp"

using namespace cvstab;

namespace {

void expect_basis_contract(const StabilizerCode &code, const LogicalBasis &basis) {
    ASSERT_EQ(basis.size(), code.num_logical_modes());
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (const auto *v : {&basis[i].x, &basis[i].z}) {
            EXPECT_TRUE(code.normalizer_space().contains(*v));
            EXPECT_FALSE(code.stabilizer_space().contains(*v));
        }
        for (std::size_t j = 0; j < basis.size(); ++j) {
            EXPECT_EQ(symplectic_form(basis[i].x, basis[j].z), i == j ? 1 : 0);
            EXPECT_EQ(symplectic_form(basis[i].x, basis[j].x), 0);
            EXPECT_EQ(symplectic_form(basis[i].z, basis[j].z), 0);
        }
    }
}

}  // namespace

TEST(Validate, AcceptsThreeModeRows) {
    auto code = validate({PauliVector({0, 0, 0}, {1, -1, 0}), PauliVector({0, 0, 0}, {0, 1, -1})});
    EXPECT_EQ(code.num_modes(), 3u);
    EXPECT_EQ(code.num_generators(), 2u);
    EXPECT_EQ(code.num_logical_modes(), 1u);
}

TEST(Validate, ReportsFirstNonIsotropicPair) {
    try {
        validate({PauliVector({1}, {0}), PauliVector({0}, {1})});
        FAIL() << "expected NonIsotropic";
    } catch (const NonIsotropic &e) {
        EXPECT_EQ(e.first, 1u);
        EXPECT_EQ(e.second, 2u);
        EXPECT_EQ(e.value, 1);
        EXPECT_STREQ(e.what(), "NonIsotropic(1,2,1)");
    }
}

TEST(Validate, ReportsDependentRow) {
    PauliVector a({0, 0}, {1, 0});
    PauliVector b({0, 0}, {0, 1});
    try {
        validate({a, b, a + Scalar(2) * b});
        FAIL() << "expected RankDeficient";
    } catch (const RankDeficient &e) {
        EXPECT_EQ(e.row, 3u);
    }
    EXPECT_THROW(validate({PauliVector({0, 0}, {0, 0})}), RankDeficient);
}

TEST(Validate, RejectsMixedModeCounts) {
    EXPECT_THROW(validate({PauliVector({0, 0}, {1, 0}), PauliVector({0}, {1})}), DimensionMismatch);
    EXPECT_THROW(validate({}), std::invalid_argument);
}

TEST(Catalog, EveryBuiltinIsExactlyIsotropicAndFullRank) {
    for (const auto &name : builtin_names()) {
        auto entry = builtin(name);
        const auto &g = entry.code.generators();
        for (std::size_t i = 0; i < g.size(); ++i) {
            for (std::size_t j = i + 1; j < g.size(); ++j) {
                EXPECT_EQ(symplectic_form(g[i], g[j]), 0) << name << " " << i << "," << j;
            }
        }
        EXPECT_EQ(oracle::rank(oracle::coords(g)), g.size()) << name;
        EXPECT_EQ(entry.code.name(), name);
        expect_basis_contract(entry.code, entry.basis);
    }
    EXPECT_THROW(builtin("seven-mode"), UnknownCode);
}

TEST(Catalog, ShapesAndPrintedOperators) {
    auto q = builtin("three-mode-q");
    EXPECT_EQ(q.code.generators()[0], PauliVector({0, 0, 0}, {1, -1, 0}));
    EXPECT_EQ(q.code.generators()[1], PauliVector({0, 0, 0}, {0, 1, -1}));
    EXPECT_EQ(q.basis[0].x, PauliVector({1, 1, 1}, {0, 0, 0}));
    EXPECT_EQ(q.basis.source(), LogicalSource::derived);

    auto b = builtin("five-mode-braunstein");
    EXPECT_EQ(b.code.num_modes(), 5u);
    EXPECT_EQ(b.code.num_generators(), 4u);
    EXPECT_EQ(b.basis[0].x, PauliVector({0, 1, 1, 0, 0}, {1, 0, 0, 0, 0}));
    EXPECT_EQ(b.basis[0].z, PauliVector({1, 0, 0, 0, 0}, {0, 1, 1, 0, 0}));
    EXPECT_EQ(b.basis.source(), LogicalSource::catalog);

    auto e = builtin("eight-mode-gottesman");
    EXPECT_EQ(e.code.num_modes(), 8u);
    EXPECT_EQ(e.code.num_generators(), 5u);
    EXPECT_EQ(e.basis.size(), 3u);
    EXPECT_EQ(e.basis[0].x, PauliVector({1, -1, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0, 0, 1, 0, -1}));

    auto nine = builtin("nine-mode");
    EXPECT_EQ(nine.code.num_modes(), 9u);
    EXPECT_EQ(nine.code.num_generators(), 8u);
}

TEST(Catalog, EightModeThirdLogicalResolution) {
    // Only c = -1 in mode 4's t slot makes X3 commute with every generator.
    auto e = builtin("eight-mode-gottesman");
    for (int c : {-1, 0, 1}) {
        PauliVector x3({1, 0, 0, 0, 1, 0, 0, 0}, {0, 0, 0, c, 0, 1, 0, 0});
        bool commutes = true;
        for (const auto &g : e.code.generators()) {
            commutes = commutes && symplectic_form(x3, g) == 0;
        }
        EXPECT_EQ(commutes, c == -1) << c;
    }
    EXPECT_EQ(e.basis[2].x.t(3), -1);
    // Gram matrix over (x1, z1, x2, z2, x3, z3) is the standard form.
    std::vector<PauliVector> ops;
    for (const auto &p : e.basis.pairs()) {
        ops.push_back(p.x);
        ops.push_back(p.z);
    }
    for (std::size_t i = 0; i < 6; ++i) {
        for (std::size_t j = 0; j < 6; ++j) {
            int expected = 0;
            if (i / 2 == j / 2 && i != j) {
                expected = i % 2 == 0 ? 1 : -1;
            }
            EXPECT_EQ(symplectic_form(ops[i], ops[j]), expected) << i << "," << j;
        }
    }
}

TEST(LogicalBasis, DerivedForEveryBuiltin) {
    for (const auto &name : builtin_names()) {
        auto code = builtin(name).code;
        auto basis = logical_basis(code);
        expect_basis_contract(code, basis);
        EXPECT_EQ(basis.source(), LogicalSource::derived);
        // Deterministic.
        auto again = logical_basis(code);
        for (std::size_t i = 0; i < basis.size(); ++i) {
            EXPECT_EQ(basis[i], again[i]);
        }
    }
}

TEST(LogicalBasis, BraunsteinPairHasUnitForm) {
    auto code = builtin("five-mode-braunstein").code;
    auto basis = logical_basis(code);
    ASSERT_EQ(basis.size(), 1u);
    EXPECT_EQ(symplectic_form(basis[0].x, basis[0].z), 1);
}

TEST(LogicalBasis, RandomCodes) {
    std::mt19937_64 rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 1 + trial % 4;
        std::size_t k = trial % (n + 1);
        auto code = validate(n, oracle::random_isotropic_rows(n, k, rng));
        auto basis = logical_basis(code);
        expect_basis_contract(code, basis);
        for (const auto &g : code.generators()) {
            EXPECT_EQ(contains_logical(code, basis, g).kind, Classification::Kind::stabilizer);
        }
        for (const auto &p : basis.pairs()) {
            EXPECT_EQ(contains_logical(code, basis, p.x).kind, Classification::Kind::logical);
            EXPECT_EQ(contains_logical(code, basis, p.z).kind, Classification::Kind::logical);
        }
    }
}

TEST(LogicalBasis, RescalesAndRejects) {
    auto code = builtin("three-mode-q").code;
    auto basis = make_logical_basis(
        code, {{PauliVector({1, 1, 1}, {0, 0, 0}), PauliVector({0, 0, 0}, {2, 0, 0})}}, LogicalSource::file);
    EXPECT_EQ(basis[0].z, PauliVector({0, 0, 0}, {1, 0, 0}));
    EXPECT_EQ(basis.source(), LogicalSource::file);
    // Not in the normalizer.
    EXPECT_THROW(
        make_logical_basis(
            code, {{PauliVector({1, 0, 0}, {0, 0, 0}), PauliVector({0, 0, 0}, {1, 0, 0})}}, LogicalSource::file),
        InvalidLogicalBasis);
    // omega(x, z) = 0.
    EXPECT_THROW(
        make_logical_basis(
            code, {{PauliVector({1, 1, 1}, {0, 0, 0}), PauliVector({0, 0, 0}, {1, -1, 0})}}, LogicalSource::file),
        InvalidLogicalBasis);
    EXPECT_THROW(make_logical_basis(code, {}, LogicalSource::file), InvalidLogicalBasis);
}

TEST(ContainsLogical, ThreeModeExamples) {
    auto [code, basis] = builtin("three-mode-q");
    auto g = contains_logical(code, basis, code.generators()[0]);
    EXPECT_EQ(g.kind, Classification::Kind::stabilizer);
    auto x = contains_logical(code, basis, PauliVector({1, 1, 1}, {0, 0, 0}));
    ASSERT_EQ(x.kind, Classification::Kind::logical);
    EXPECT_EQ(x.coefficients, (std::vector<Scalar>{1, 0}));
    auto z = contains_logical(code, basis, PauliVector({0, 0, 0}, {0, 0, 3}));
    ASSERT_EQ(z.kind, Classification::Kind::logical);
    EXPECT_EQ(z.coefficients, (std::vector<Scalar>{0, 3}));
    EXPECT_EQ(contains_logical(code, basis, PauliVector({1, 0, 0}, {0, 0, 0})).kind, Classification::Kind::outside);
    EXPECT_THROW(contains_logical(code, basis, PauliVector({1}, {0})), DimensionMismatch);
}

TEST(ContainsLogical, CoefficientsReconstructCoset) {
    std::mt19937_64 rng(43);
    for (const auto &name : builtin_names()) {
        auto [code, basis] = builtin(name);
        for (int trial = 0; trial < 10; ++trial) {
            PauliVector v(code.num_modes());
            std::vector<Scalar> c;
            for (const auto &p : basis.pairs()) {
                Scalar a = oracle::random_rational(rng);
                Scalar b = oracle::random_rational(rng);
                v += a * p.x + b * p.z;
                c.push_back(a);
                c.push_back(b);
            }
            for (const auto &g : code.generators()) {
                v += oracle::random_rational(rng) * g;
            }
            auto cls = contains_logical(code, basis, v);
            if (std::all_of(c.begin(), c.end(), [](const Scalar &s) { return s == 0; })) {
                EXPECT_EQ(cls.kind, Classification::Kind::stabilizer);
            } else {
                EXPECT_EQ(cls.kind, Classification::Kind::logical);
            }
            EXPECT_EQ(cls.coefficients, c);
        }
    }
}

TEST(Concatenate, ThreeModeCodesGiveNineModeCode) {
    auto outer = builtin("three-mode-q");
    auto inner = builtin("three-mode-p");
    auto cat = concatenate(outer.code, outer.basis, inner.code);
    EXPECT_EQ(cat.code.num_modes(), 9u);
    EXPECT_EQ(cat.code.num_generators(), 8u);
    EXPECT_EQ(cat.code.num_logical_modes(), 1u);
    expect_basis_contract(cat.code, cat.basis);
    PauliVector ones_s({1, 1, 1, 1, 1, 1, 1, 1, 1}, {0, 0, 0, 0, 0, 0, 0, 0, 0});
    PauliVector ones_t({0, 0, 0, 0, 0, 0, 0, 0, 0}, {1, 1, 1, 1, 1, 1, 1, 1, 1});
    auto cx = contains_logical(cat.code, cat.basis, ones_s);
    auto cz = contains_logical(cat.code, cat.basis, ones_t);
    ASSERT_EQ(cx.kind, Classification::Kind::logical);
    ASSERT_EQ(cz.kind, Classification::Kind::logical);
    EXPECT_NE(cx.coefficients[0], 0);
    EXPECT_EQ(cx.coefficients[1], 0);
    EXPECT_EQ(cz.coefficients[0], 0);
    EXPECT_NE(cz.coefficients[1], 0);
}

TEST(Concatenate, MatchesNineModeBuiltin) {
    auto nine = builtin("nine-mode");
    auto cat = concatenate(builtin("three-mode-q").code, builtin("three-mode-p").code);
    EXPECT_EQ(cat.stabilizer_space(), nine.code.stabilizer_space());
    auto cat_basis = logical_basis(cat);
    // Same logical cosets: each builtin logical differs from some combination
    // of the other basis by a stabilizer, with matching orientation.
    for (std::size_t i = 0; i < nine.basis.size(); ++i) {
        auto cx = contains_logical(cat, cat_basis, nine.basis[i].x);
        auto cz = contains_logical(cat, cat_basis, nine.basis[i].z);
        ASSERT_EQ(cx.kind, Classification::Kind::logical);
        ASSERT_EQ(cz.kind, Classification::Kind::logical);
        // The change of basis preserves omega.
        EXPECT_EQ(cx.coefficients[0] * cz.coefficients[1] - cx.coefficients[1] * cz.coefficients[0], 1);
    }
}

TEST(Concatenate, TrivialInnerReturnsOuter) {
    auto outer = builtin("five-mode-braunstein");
    auto cat = concatenate(outer.code, outer.basis, trivial_code(1));
    EXPECT_EQ(cat.code.generators(), outer.code.generators());
    EXPECT_EQ(cat.basis[0], outer.basis[0]);
}

TEST(Concatenate, RejectsMultiModeInner) {
    auto outer = builtin("three-mode-q");
    EXPECT_THROW(concatenate(outer.code, builtin("eight-mode-gottesman").code), Unsupported);
}

TEST(Concatenate, RandomSmallCodesStayValid) {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n_out = 1 + trial % 3;
        std::size_t k_out = trial % (n_out + 1);
        std::size_t n_in = 1 + (trial / 3) % 3;
        auto outer = validate(n_out, oracle::random_isotropic_rows(n_out, k_out, rng));
        auto inner = validate(n_in, oracle::random_isotropic_rows(n_in, n_in - 1, rng));
        auto outer_basis = logical_basis(outer);
        auto cat = concatenate(outer, outer_basis, inner);
        EXPECT_EQ(cat.code.num_modes(), n_out * n_in);
        EXPECT_EQ(cat.code.num_logical_modes(), outer.num_logical_modes());
        expect_basis_contract(cat.code, cat.basis);
    }
}

TEST(SyndromeObservables, Rendering) {
    auto obs = syndrome_observables(builtin("three-mode-q").code);
    ASSERT_EQ(obs.size(), 2u);
    EXPECT_EQ(obs[0].str(), "q1 - q2");
    EXPECT_EQ(obs[1].str(), "q2 - q3");
    EXPECT_TRUE(syndrome_observables(trivial_code(2)).empty());
    auto eight = syndrome_observables(builtin("eight-mode-gottesman").code);
    EXPECT_EQ(eight[0].str(), "p1 + p2 + p3 + p4 + p5 + p6 + p7 + p8");
    auto code = builtin("three-mode-q").code;
    for (std::size_t j = 0; j < obs.size(); ++j) {
        EXPECT_EQ(obs[j].coefficients, code.generators()[j]);
    }
    SyndromeObservable mixed{PauliVector({0, 0, 0, 0}, {0, 0, 0, 0})};
    EXPECT_EQ(mixed.str(), "0");
    SyndromeObservable frac{PauliVector::from_coords({make_scalar(-3, 2), 0, 1, 0})};
    EXPECT_EQ(frac.str(), "-3/2 p1 + q1");
}

TEST(CodeFormat, RoundTripsEveryBuiltin) {
    for (const auto &name : builtin_names()) {
        auto [code, basis] = builtin(name);
        std::string text = format_code_text(code, &basis);
        auto doc = parse_code_text(text);
        EXPECT_EQ(doc.n, code.num_modes());
        EXPECT_EQ(doc.rows, code.generators());
        ASSERT_EQ(doc.logicals.size(), basis.size());
        for (std::size_t i = 0; i < basis.size(); ++i) {
            EXPECT_EQ(doc.logicals[i], basis[i]);
        }
    }
}

TEST(CodeFormat, AcceptsCommentsAndRationals) {
    auto doc = parse_code_text(
        "# a comment\n"
        "cvstab 1\n"
        "\n"
        "n 2   # modes\n"
        "k 1\n"
        "row 3/2 0 | 0 -1\n");
    EXPECT_EQ(doc.n, 2u);
    ASSERT_EQ(doc.rows.size(), 1u);
    EXPECT_EQ(doc.rows[0], PauliVector::from_coords({make_scalar(3, 2), 0, 0, -1}));
}

TEST(CodeFormat, ErrorsCarryLineNumbers) {
    auto line_of = [](const std::string &text) -> std::size_t {
        try {
            parse_code_text(text);
        } catch (const ParseError &e) {
            return e.line;
        }
        return 0;
    };
    EXPECT_EQ(line_of("cvstab 2\n"), 1u);
    EXPECT_EQ(line_of("cvstab 1\nn 2\nk 1\nrow 1 0 | 0\n"), 4u);
    EXPECT_EQ(line_of("cvstab 1\nn 2\nk 1\nrow 1 0 0 1\n"), 4u);
    EXPECT_EQ(line_of("cvstab 1\nn 1\nk 1\n# c\nrow x | 0\n"), 5u);
    EXPECT_EQ(line_of("cvstab 1\nn 1\nk 0\nlogical z 1 | 0\n"), 4u);
    EXPECT_EQ(line_of("cvstab 1\nn 1\nk 0\nlogical x 1 | 0\n"), 4u);
    EXPECT_EQ(line_of("cvstab 1\nn 1\nk 2\nrow 0 | 1\n"), 4u);
}
