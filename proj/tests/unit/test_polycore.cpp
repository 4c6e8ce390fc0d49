#include <gtest/gtest.h>

#include "diffelim/error.hpp"
#include "support.hpp"

using namespace diffelim;
using testing_support::random_poly;
using testing_support::Ring;

TEST(Polynomial, AddExamples) {
  Ring R({"x", "y"});
  auto x = R.var(0), y = R.var(1);
  EXPECT_EQ((x + y) + (x - y), x * Rational(2));
  Polynomial p = x * x * y - Rational(3) * y;
  EXPECT_EQ(p + R.cst(0), p);
  EXPECT_EQ((x * x - R.cst(1)) + R.cst(1), x * x);
}

TEST(Polynomial, MulExamples) {
  Ring R({"x", "y"});
  auto x = R.var(0), y = R.var(1);
  EXPECT_EQ((x + R.cst(1)) * (x - R.cst(1)), x * x - R.cst(1));
  Polynomial p = x * y + R.cst(Rational(1, 3));
  EXPECT_EQ(p * R.cst(1), p);
  EXPECT_EQ((x + y).pow(2), x * x + Rational(2) * x * y + y * y);
}

TEST(Polynomial, LeadingTermExamples) {
  Ring R({"x", "y"});
  auto x = R.var(0), y = R.var(1);
  auto [m1, c1] = (x * x * y + x * y * y).leading_term(MonomialOrder::grevlex(R.vars));
  EXPECT_EQ(m1, Monomial::from_pairs(std::vector<std::pair<VarIndex, Exponent>>{{R.vars[0], 2}, {R.vars[1], 1}}));
  EXPECT_EQ(c1, 1);
  auto [m2, c2] = (x + y * y).leading_term(MonomialOrder::lex(R.vars));
  EXPECT_EQ(m2, Monomial::variable(R.vars[0]));
  EXPECT_EQ(c2, 1);
  auto [m3, c3] = R.cst(5).leading_term(MonomialOrder::lex(R.vars));
  EXPECT_TRUE(m3.is_one());
  EXPECT_EQ(c3, 5);
  EXPECT_THROW(R.cst(0).leading_term(MonomialOrder::lex(R.vars)), PreconditionError);
}

TEST(Polynomial, DegreeExamples) {
  Ring R({"y", "z"});
  auto f = R.parse("(1 - y^2)*z - y");
  std::vector<VarIndex> ys{R.vars[0]};
  EXPECT_EQ(f.degree_in(ys), 2);
  EXPECT_EQ(R.cst(7).total_degree(), 0);
  EXPECT_EQ(R.cst(0).total_degree(), kDegreeOfZero);

  auto reg = VarRegistry::create();
  VarIndex x0 = reg->intern({"x", 0}), x1 = reg->intern({"x", 1}), y0 = reg->intern({"y", 0});
  Polynomial g = Polynomial::variable(reg, x1) * Polynomial::variable(reg, y0, 2) + Polynomial::variable(reg, x0, 3);
  std::vector<VarIndex> xs{x0, x1};
  EXPECT_EQ(g.degree_in(xs), 3);
}

TEST(Polynomial, RingAxiomsOnRandomInputs) {
  Ring R({"a", "b", "c"});
  std::mt19937_64 rng(11);
  for (int k = 0; k < 200; ++k) {
    auto p = random_poly(R, rng, 4, 3), q = random_poly(R, rng, 4, 3), r = random_poly(R, rng, 4, 3);
    EXPECT_EQ(p + q, q + p);
    EXPECT_EQ(p * q, q * p);
    EXPECT_EQ((p + q) + r, p + (q + r));
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_EQ(p * (q + r), p * q + p * r);
    EXPECT_TRUE((p - p).is_zero());
  }
}

TEST(Polynomial, DegreeOfProductIsAdditive) {
  Ring R({"a", "b"});
  std::mt19937_64 rng(12);
  for (int k = 0; k < 200; ++k) {
    auto p = random_poly(R, rng, 3, 4), q = random_poly(R, rng, 3, 4);
    if (p.is_zero() || q.is_zero()) continue;
    EXPECT_EQ((p * q).total_degree(), p.total_degree() + q.total_degree());
  }
}

TEST(Polynomial, ContentRoundTrip) {
  Ring R({"a", "b"});
  std::mt19937_64 rng(13);
  for (int k = 0; k < 200; ++k) {
    auto p = random_poly(R, rng, 4, 3) * (Rational(k % 7 + 1) / 6);
    if (p.is_zero()) continue;
    EXPECT_EQ(p.primitive_part() * p.content(), p);
    Polynomial pp = p.primitive_part();
    for (const auto& t : pp.terms()) EXPECT_TRUE(t.coeff.get_den() == 1);
  }
  auto p = R.parse("-6*a^2 + 4/3*b");
  EXPECT_EQ(p.primitive_part(), R.parse("9*a^2 - 2*b"));
}

TEST(Polynomial, RegistryMismatchThrows) {
  Ring R({"x"}), S({"x"});
  EXPECT_THROW(R.var(0) + S.var(0), RegistryMismatch);
  EXPECT_THROW(R.var(0) * S.var(0), RegistryMismatch);
}

TEST(Polynomial, SubstituteAndCompose) {
  Ring R({"x", "y"});
  auto f = R.parse("x^2*y - 3*y + 1");
  EXPECT_EQ(f.substitute({{R.vars[1], Rational(2)}}), R.parse("2*x^2 - 5"));
  EXPECT_EQ(f.compose({{R.vars[0], R.parse("x + 1")}}), R.parse("(x + 1)^2*y - 3*y + 1"));
  EXPECT_EQ(f.partial(R.vars[0]), R.parse("2*x*y"));
}

TEST(Polynomial, ProportionalTo) {
  Ring R({"x", "y"});
  EXPECT_TRUE(R.parse("2*x - 4*y").proportional_to(R.parse("-x/3 + 2/3*y")));
  EXPECT_FALSE(R.parse("x - y").proportional_to(R.parse("x + y")));
}

TEST(MonomialOrder, LawsOnRandomMonomials) {
  std::mt19937_64 rng(14);
  std::uniform_int_distribution<Exponent> e(0, 3);
  auto random_mono = [&] {
    std::vector<Exponent> v(4);
    for (auto& x : v) x = e(rng);
    return Monomial::from_exponents(v);
  };
  std::vector<VarIndex> vars{0, 1, 2, 3};
  std::vector<MonomialOrder> orders{MonomialOrder::lex(vars), MonomialOrder::grevlex(vars),
                                    MonomialOrder::block({{{0, 1}, OrderKind::Grevlex}, {{2, 3}, OrderKind::Lex}})};
  for (const auto& ord : orders) {
    for (int k = 0; k < 300; ++k) {
      Monomial a = random_mono(), b = random_mono(), c = random_mono();
      auto ab = ord.compare(a, b);
      EXPECT_EQ(ab == 0, a == b);
      EXPECT_EQ(ord.compare(b, a), 0 <=> ab);
      if (ab < 0) EXPECT_TRUE(ord.compare(a * c, b * c) < 0);
      EXPECT_TRUE(ord.compare(Monomial(), a) <= 0);
    }
  }
}

TEST(Scalar, RationalsInLowestTerms) {
  Rational q = parse_rational("-6/4");
  EXPECT_EQ(q.get_num(), -3);
  EXPECT_EQ(q.get_den(), 2);
  EXPECT_EQ(parse_rational("0.25"), Rational(1, 4));
  EXPECT_EQ(to_string(Rational(-3, 2)), "-3/2");
  EXPECT_THROW(parse_rational("1/0"), Error);
}

TEST(Scalar, ModPArithmetic) {
  ModP::Scope scope(101);
  ModP a(-1);
  EXPECT_EQ(a.value(), 100u);
  EXPECT_EQ((ModP(7) * ModP(7).inverse()).value(), 1u);
  EXPECT_EQ(ModP::from_rational(Rational(1, 2)).value(), 51u);
  EXPECT_THROW(ModP::from_rational(Rational(1, 101)), PreconditionError);
}

TEST(DiffVariable, RenderingRoundTrips) {
  for (unsigned j = 0; j < 7; ++j) {
    DiffVariable v{"x", j};
    auto back = DiffVariable::parse(v.to_string());
    ASSERT_TRUE(back.has_value());
    EXPECT_EQ(*back, v);
  }
  EXPECT_EQ((DiffVariable{"x", 0}).to_string(), "x");
  EXPECT_EQ((DiffVariable{"x", 1}).to_string(), "x'");
  EXPECT_EQ((DiffVariable{"x", 5}).to_string(), "x^(5)");
}
