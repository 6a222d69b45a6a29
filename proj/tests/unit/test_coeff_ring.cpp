#include <random>

#include "gtest/gtest.h"

#include "hecke/coeff_ring.hpp"

using hecke::Integer;
using hecke::OpCounter;
using hecke::PolyZ;
using hecke::RingCtx;

namespace {

bool canonical(const PolyZ& p) { return p.is_zero() || p.coeffs().back() != 0; }

PolyZ random_poly(std::mt19937_64& rng, int max_degree = 3) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::uniform_int_distribution<int> deg(-1, max_degree);
  std::vector<Integer> c(static_cast<std::size_t>(deg(rng) + 1));
  for (auto& x : c) x = coeff(rng);
  return PolyZ(std::move(c));
}

}  // namespace

TEST(CoeffRing, Constants) {
  EXPECT_EQ(hecke::q_elem(), (PolyZ{0, 1}));
  EXPECT_EQ(hecke::q_minus_one(), (PolyZ{-1, 1}));
  EXPECT_TRUE(hecke::zero_elem().is_zero());
  EXPECT_EQ(hecke::zero_elem().coeffs().size(), 0u);
  EXPECT_EQ(hecke::one_elem(), PolyZ::constant(1));
}

TEST(CoeffRing, AddExamples) {
  RingCtx ctx;
  EXPECT_EQ(ring_add(ctx, PolyZ{}, PolyZ{}), PolyZ{});
  EXPECT_EQ(ring_add(ctx, hecke::q_minus_one(), PolyZ{1}), hecke::q_elem());
  PolyZ r = ring_add(ctx, PolyZ{1, 0, 3}, PolyZ{0, 0, -3});
  EXPECT_EQ(r, PolyZ{1});
  EXPECT_EQ(r.degree(), 0);
}

TEST(CoeffRing, MulExamples) {
  RingCtx ctx;
  EXPECT_EQ(ring_mul(ctx, hecke::q_elem(), hecke::q_elem()), (PolyZ{0, 0, 1}));
  PolyZ x{3, -2, 7};
  EXPECT_EQ(ring_mul(ctx, x, hecke::one_elem()), x);
  EXPECT_EQ(ring_mul(ctx, hecke::q_minus_one(), PolyZ{1, 1}), (PolyZ{-1, 0, 1}));
  EXPECT_TRUE(ring_mul(ctx, x, PolyZ{}).is_zero());
}

TEST(CoeffRing, EvalAt) {
  EXPECT_EQ(hecke::eval_at(PolyZ{-1, 0, 1}, 1), 0);
  EXPECT_EQ(hecke::eval_at(hecke::q_elem(), 5), 5);
  EXPECT_EQ(hecke::eval_at(PolyZ{3, 2}, 0), 3);
  EXPECT_EQ(hecke::eval_at(PolyZ{}, 7), 0);
}

TEST(CoeffRing, TrimsOnConstruction) {
  PolyZ p(std::vector<Integer>{1, 2, 0, 0});
  EXPECT_EQ(p.degree(), 1);
  EXPECT_TRUE(PolyZ(std::vector<Integer>{0, 0}).is_zero());
}

TEST(CoeffRing, PrettyPrint) {
  EXPECT_EQ(to_string(PolyZ{-1, 0, 1}), "q^2 - 1");
  EXPECT_EQ(to_string(hecke::q_minus_one()), "q - 1");
  EXPECT_EQ(to_string(PolyZ{}), "0");
  EXPECT_EQ(to_string(PolyZ{0, -2, 0, 1}), "q^3 - 2q");
  EXPECT_EQ(to_string(PolyZ{5}), "5");
  EXPECT_EQ(to_string(PolyZ{0, -1}), "-q");
}

TEST(CoeffRing, ArbitraryPrecision) {
  RingCtx ctx;
  PolyZ big = PolyZ::constant(Integer(1) << 80);
  PolyZ sq = ring_mul(ctx, big, big);
  EXPECT_EQ(sq.coefficient(0), Integer(1) << 160);
}

TEST(CoeffRing, SpecialMultipliersMatchEvaluation) {
  // q p and (q-1) p checked pointwise at several q, independent of multiplication.
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    PolyZ a = random_poly(rng);
    PolyZ viaQ = a;
    viaQ.multiply_by_q();
    PolyZ viaQm1 = a;
    viaQm1.multiply_by_q_minus_one();
    for (int v = -3; v <= 3; ++v) {
      EXPECT_EQ(hecke::eval_at(viaQ, v), v * hecke::eval_at(a, v));
      EXPECT_EQ(hecke::eval_at(viaQm1, v), (v - 1) * hecke::eval_at(a, v));
    }
    EXPECT_TRUE(canonical(viaQ));
    EXPECT_TRUE(canonical(viaQm1));
    EXPECT_EQ(a * (PolyZ{0, 1}), viaQ);
    EXPECT_EQ(a * (PolyZ{-1, 1}), viaQm1);
  }
}

TEST(CoeffRing, RingAxiomsExhaustiveSmallGrid) {
  // All polynomials of degree <= 1 with coefficients in {-1,0,1}.
  std::vector<PolyZ> grid;
  for (int a = -1; a <= 1; ++a)
    for (int b = -1; b <= 1; ++b) grid.push_back(PolyZ{a, b});
  for (const auto& x : grid)
    for (const auto& y : grid) {
      EXPECT_EQ(x + y, y + x);
      EXPECT_EQ(x * y, y * x);
      for (const auto& z : grid) {
        EXPECT_EQ((x + y) + z, x + (y + z));
        EXPECT_EQ((x * y) * z, x * (y * z));
        EXPECT_EQ(x * (y + z), x * y + x * z);
      }
    }
}

TEST(CoeffRing, RingAxiomsRandomized) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    PolyZ x = random_poly(rng, 5), y = random_poly(rng, 5), z = random_poly(rng, 5);
    ASSERT_EQ((x * y) * z, x * (y * z));
    ASSERT_EQ(x * (y + z), x * y + x * z);
    ASSERT_EQ(x + y, y + x);
    ASSERT_TRUE(canonical(x * y));
    ASSERT_TRUE(canonical(x + y));
    ASSERT_TRUE(canonical(x - x));
  }
}

TEST(CoeffRing, CounterTalliesOnePerOperation) {
  // Random expression trees: counter must read exactly (#add nodes, #mul nodes).
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    RingCtx ctx = RingCtx::counting();
    std::uint64_t adds = 0, muls = 0;
    PolyZ acc = random_poly(rng);
    std::uniform_int_distribution<int> op(0, 5);
    for (int step = 0; step < 20; ++step) {
      PolyZ operand = random_poly(rng, 2);
      switch (op(rng)) {
        case 0: acc = ctx.add(acc, operand); ++adds; break;
        case 1: acc = ctx.mul(acc, operand); ++muls; break;
        case 2: ctx.add_into(acc, operand); ++adds; break;
        case 3: ctx.mul_into(acc, operand); ++muls; break;
        case 4: ctx.mul_by_q(acc); ++muls; break;
        default: ctx.mul_by_q_minus_one(acc); ++muls; break;
      }
    }
    ASSERT_TRUE(ctx.counter().has_value());
    EXPECT_EQ(ctx.counter()->adds, adds);
    EXPECT_EQ(ctx.counter()->muls, muls);
    EXPECT_EQ(ctx.total(), adds + muls);
  }
}

TEST(CoeffRing, CounterResetAndOptIn) {
  RingCtx plain;
  EXPECT_FALSE(plain.is_counting());
  plain.add(PolyZ{1}, PolyZ{2});
  EXPECT_EQ(plain.total(), 0u);

  RingCtx ctx = RingCtx::counting();
  ctx.mul(PolyZ{1}, hecke::one_elem());
  ctx.add(PolyZ{}, PolyZ{});
  EXPECT_EQ(*ctx.counter(), (OpCounter{1, 1}));
  ctx.reset();
  EXPECT_EQ(ctx.counter()->total(), 0u);
}
