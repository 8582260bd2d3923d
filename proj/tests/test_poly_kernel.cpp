/*
   Copyright 2026 The modrees Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>

#include <modrees/matrix.hpp>
#include <modrees/ring.hpp>

using namespace modrees;

using QRing = Ring<RationalField>;
using QPoly = Polynomial<Rational>;

namespace {

QRing qring(std::vector<std::string> vars, std::vector<std::string> ideal = {}) {
    QRing tmp(RationalField{}, vars);
    std::vector<QPoly> gens;
    for (auto& s : ideal) gens.push_back(tmp.parse(s));
    return QRing(RationalField{}, vars, gens);
}

Ring<PrimeField> fpring(std::uint32_t p, std::vector<std::string> vars,
                        std::vector<std::string> ideal = {}) {
    Ring<PrimeField> tmp(PrimeField{p}, vars);
    std::vector<Polynomial<Fp>> gens;
    for (auto& s : ideal) gens.push_back(tmp.parse(s));
    return Ring<PrimeField>(PrimeField{p}, vars, gens);
}

// hand division oracle: subtract quotient*divisor one leading term at a time,
// no Groebner machinery involved
QPoly long_divide_remainder(const QRing& R, QPoly p, const std::vector<QPoly>& divisors) {
    QPoly rem = R.zero();
    while (!p.is_zero()) {
        bool hit = false;
        for (auto& d : divisors) {
            if (!d.is_zero() && d.lead_monomial().divides(p.lead_monomial())) {
                auto q = QPoly::monomial(p.lead_monomial() / d.lead_monomial(),
                                         p.lead_coeff() / d.lead_coeff(), R.order());
                p = p - q * d;
                hit = true;
                break;
            }
        }
        if (!hit) {
            auto head = QPoly::monomial(p.lead_monomial(), p.lead_coeff(), R.order());
            rem = rem + head;
            p = p - head;
        }
    }
    return rem;
}

}  // namespace

TEST_CASE("rational arithmetic is exact and canonical") {
    Rational a(1, 3), b(2, 5);
    REQUIRE((a + b) == Rational(11, 15));
    REQUIRE((a * b) == Rational(2, 15));
    REQUIRE((a - a).is_zero());
    REQUIRE(Rational(2, -4) == Rational(-1, 2));
    REQUIRE(Rational(-1, 2).str() == "-1/2");
    REQUIRE(Rational(7, 1).inv() == Rational(1, 7));
}

TEST_CASE("prime field arithmetic") {
    Fp a(3, 5), b(4, 5);
    REQUIRE((a + b).value() == 2);
    REQUIRE((a * b).value() == 2);
    REQUIRE((a - b).value() == 4);
    REQUIRE((b.inv() * b).is_one());
    REQUIRE_THROWS_AS(PrimeField{6}, std::invalid_argument);
}

TEST_CASE("polynomial parse, print, arithmetic round trip") {
    auto R = qring({"x", "y"});
    auto p = R.parse("3/2*x^2*y - 5");
    REQUIRE(R.str(p) == "3/2*x^2*y - 5");
    REQUIRE(R.str(R.parse("x*y - y*x")) == "0");
    auto q = R.parse("x + y");
    REQUIRE(R.str(q * q) == "x^2 + 2*x*y + y^2");
    REQUIRE((p - p).is_zero());
    REQUIRE(R.parse("-x + 2") == R.parse("2 - x"));
}

TEST_CASE("degrevlex and lex orders behave classically") {
    auto R = qring({"x", "y", "z"});
    auto ord = MonomialOrder::degrevlex();
    // x*z vs y^2: same degree, revlex compares from z: x*z has z-exp 1 > 0, so smaller
    auto xz = R.parse("x*z").lead_monomial();
    auto y2 = R.parse("y^2").lead_monomial();
    REQUIRE(ord.greater(y2, xz));
    auto lex = MonomialOrder::lex();
    REQUIRE(lex.greater(xz, y2));
}

TEST_CASE("normal form: spec examples") {
    SECTION("zero case") {
        auto R = qring({"x", "y"});
        auto gb = buchberger<Rational>({R.parse("x^2 - y")}, R.order());
        REQUIRE(normal_form(R.zero(), gb, R.order()).is_zero());
    }
    SECTION("x^3 against x^2 - y in degrevlex") {
        auto R = qring({"x", "y"});
        auto gb = buchberger<Rational>({R.parse("x^2 - y")}, R.order());
        auto nf = normal_form(R.parse("x^3"), gb, R.order());
        REQUIRE(R.str(nf) == "x*y");
        REQUIRE(nf == long_divide_remainder(R, R.parse("x^3"), gb));
    }
    SECTION("over F5: x^2 + 3x mod x^2") {
        auto R = fpring(5, {"x"});
        auto gb = buchberger<Fp>({R.parse("x^2")}, R.order());
        auto nf = normal_form(R.parse("x^2 + 3*x"), gb, R.order());
        REQUIRE(R.str(nf) == "3*x");
    }
    SECTION("idempotence on random polynomials") {
        auto R = qring({"x", "y"});
        auto gb = buchberger<Rational>({R.parse("x^2 - y"), R.parse("x*y^2 + 1")}, R.order());
        std::mt19937_64 rng(42);
        for (int it = 0; it < 40; ++it) {
            QPoly p = R.zero();
            for (int t = 0; t < 5; ++t) {
                Monomial m(2);
                m[0] = rng() % 4;
                m[1] = rng() % 4;
                long c = static_cast<long>(rng() % 7) - 3;
                p = p + QPoly::monomial(m, Rational(c), R.order());
            }
            auto nf = normal_form(p, gb, R.order());
            REQUIRE(normal_form(nf, gb, R.order()) == nf);
        }
    }
}

TEST_CASE("buchberger: spec examples and reduced GB uniqueness") {
    SECTION("single generator is already reduced") {
        auto R = qring({"x"});
        auto gb = buchberger<Rational>({R.parse("x")}, R.order());
        REQUIRE(gb.size() == 1);
        REQUIRE(R.str(gb[0]) == "x");
    }
    SECTION("zero ideal") {
        auto R = qring({"x"});
        auto gb = buchberger<Rational>({R.zero()}, R.order());
        REQUIRE(gb.empty());
    }
    SECTION("twisted cubic in lex contains y^3 - z^2") {
        auto R = qring({"x", "y", "z"});
        auto lex = MonomialOrder::lex();
        auto gb = buchberger<Rational>({R.parse("x^2 - y"), R.parse("x^3 - z")}, lex);
        bool found = std::any_of(gb.begin(), gb.end(), [&](const QPoly& g) {
            return g == R.parse("y^3 - z^2").with_order(lex);
        });
        REQUIRE(found);
        // substitution oracle: every basis element vanishes at (t, t^2, t^3)
        auto T = qring({"t"});
        for (auto& g : gb) {
            auto img = [&](std::size_t i) {
                if (i == 0) return T.parse("t");
                if (i == 1) return T.parse("t^2");
                return T.parse("t^3");
            };
            REQUIRE(g.substituted(1, T.order(), img).is_zero());
        }
    }
    SECTION("permutation independence of the reduced basis") {
        auto R = qring({"x", "y", "z"});
        std::vector<QPoly> gens = {R.parse("x^2 - y"), R.parse("x*y - z"), R.parse("y^2 - x*z"),
                                   R.parse("x + y + z - 1")};
        auto ref = buchberger(gens, R.order());
        std::mt19937_64 rng(7);
        for (int it = 0; it < 6; ++it) {
            std::shuffle(gens.begin(), gens.end(), rng);
            auto gb = buchberger(gens, R.order());
            REQUIRE(gb.size() == ref.size());
            for (std::size_t i = 0; i < gb.size(); ++i) REQUIRE(gb[i] == ref[i]);
        }
    }
}

TEST_CASE("eliminate: spec examples") {
    SECTION("parabola has no x-free relations") {
        auto R = qring({"x", "y"});
        auto elim = eliminate_vars<Rational>({R.parse("y - x^2")}, 2, {0}, R.order());
        REQUIRE(elim.empty());
    }
    SECTION("product surface: u - s*t") {
        // ring Q[x,y,s,t,u], eliminate {x,y} from <s - x, t - y, u - x*y>
        auto R = qring({"x", "y", "s", "t", "u"});
        auto elim = eliminate_vars<Rational>({R.parse("s - x"), R.parse("t - y"), R.parse("u - x*y")},
                                             5, {0, 1}, R.order());
        REQUIRE(elim.size() == 1);
        REQUIRE(elim[0] == R.parse("u - s*t").monic());
    }
    SECTION("dropping nothing returns the ideal") {
        auto R = qring({"x"});
        auto elim = eliminate_vars<Rational>({R.parse("x")}, 1, {}, R.order());
        REQUIRE(elim.size() == 1);
        REQUIRE(R.str(elim[0]) == "x");
    }
}

TEST_CASE("syzygies: spec examples") {
    SECTION("identity has no syzygies") {
        auto R = qring({"x", "y"});
        auto syz = syzygies(R, Mat<RationalField>::identity(3, R));
        REQUIRE(syz.cols() == 0);
    }
    SECTION("Koszul syzygy of (x y)") {
        auto R = qring({"x", "y"});
        Mat<RationalField> m(1, 2, R);
        m.at(0, 0) = R.parse("x");
        m.at(0, 1) = R.parse("y");
        auto syz = syzygies(R, m);
        REQUIRE(syz.cols() == 1);
        // generator is (y, -x) up to sign
        bool straight = syz.at(0, 0) == R.parse("y") && syz.at(1, 0) == R.parse("-x");
        bool flipped = syz.at(0, 0) == R.parse("-y") && syz.at(1, 0) == R.parse("x");
        REQUIRE((straight || flipped));
        REQUIRE(mat_mul(R, m, syz).is_zero());
    }
    SECTION("annihilator over a quotient ring") {
        auto R = qring({"x", "y"}, {"x*y"});
        Mat<RationalField> m(1, 1, R);
        m.at(0, 0) = R.parse("x");
        auto syz = syzygies(R, m);
        REQUIRE(syz.cols() == 1);
        REQUIRE(syz.at(0, 0) == R.parse("y"));
    }
    SECTION("soundness M*S = 0 on random matrices") {
        auto R = qring({"x", "y"});
        std::mt19937_64 rng(11);
        const char* pool[] = {"0", "1", "x", "y", "x + 1", "x*y", "y^2 - x"};
        for (int it = 0; it < 15; ++it) {
            std::size_t rows = 1 + rng() % 3, cols = 1 + rng() % 3;
            Mat<RationalField> m(rows, cols, R);
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = R.parse(pool[rng() % 7]);
            auto syz = syzygies(R, m);
            REQUIRE(mat_mul(R, m, syz).is_zero());
        }
    }
}

TEST_CASE("lift: spec examples and soundness") {
    auto R = qring({"x", "y"});
    SECTION("zero lifts to zero") {
        Mat<RationalField> m(1, 1, R);
        m.at(0, 0) = R.parse("x");
        Mat<RationalField> b(1, 1, R);
        auto c = lift(R, b, m);
        REQUIRE(c.has_value());
        REQUIRE(c->is_zero());
    }
    SECTION("x*y against (x)") {
        Mat<RationalField> m(1, 1, R);
        m.at(0, 0) = R.parse("x");
        Mat<RationalField> b(1, 1, R);
        b.at(0, 0) = R.parse("x*y");
        auto c = lift(R, b, m);
        REQUIRE(c.has_value());
        REQUIRE(c->at(0, 0) == R.parse("y"));
    }
    SECTION("units are not multiples of x") {
        Mat<RationalField> m(1, 1, R);
        m.at(0, 0) = R.parse("x");
        Mat<RationalField> b(1, 1, R);
        b.at(0, 0) = R.one();
        REQUIRE(!lift(R, b, m).has_value());
    }
    SECTION("lift soundness and membership equivalence on random instances") {
        std::mt19937_64 rng(13);
        const char* pool[] = {"0", "1", "x", "y", "x - y", "x^2", "y + 1"};
        for (int it = 0; it < 15; ++it) {
            std::size_t rows = 1 + rng() % 2, cols = 1 + rng() % 3;
            Mat<RationalField> m(rows, cols, R);
            for (std::size_t i = 0; i < rows; ++i)
                for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = R.parse(pool[rng() % 7]);
            // b in the span by construction
            Mat<RationalField> coeffs(cols, 1, R);
            for (std::size_t j = 0; j < cols; ++j) coeffs.at(j, 0) = R.parse(pool[rng() % 7]);
            auto b = mat_mul(R, m, coeffs);
            auto c = lift(R, b, m);
            REQUIRE(c.has_value());
            REQUIRE(mat_mul(R, m, *c) == b);
        }
    }
}

TEST_CASE("standard monomials of finite quotients") {
    auto R = fpring(5, {"x", "y"}, {"x^2", "x*y", "y^2"});
    auto basis = R.standard_monomials();
    REQUIRE(basis.has_value());
    REQUIRE(basis->size() == 3);  // 1, x, y
    auto Q = qring({"x", "y"});
    REQUIRE(!Q.standard_monomials().has_value());
}
