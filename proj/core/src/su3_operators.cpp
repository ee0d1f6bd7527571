#include "weyl/su3_operators.hpp"

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "weyl/lie_basis.hpp"

namespace weyl {

namespace {

constexpr double kExactTol = 1e-14;
const Complex kI(0.0, 1.0);

Matrix e3(int i, int j) { return elementaryMatrix(3, i, j); }

Matrix gellMann(int index) {
  Matrix m = Matrix::Zero(3, 3);
  const double s3 = 1.0 / std::sqrt(3.0);
  switch (index) {
    case 1: m(0, 1) = m(1, 0) = 1.0; break;
    case 2: m(0, 1) = -kI; m(1, 0) = kI; break;
    case 3: m(0, 0) = 1.0; m(1, 1) = -1.0; break;
    case 4: m(0, 2) = m(2, 0) = 1.0; break;
    case 5: m(0, 2) = -kI; m(2, 0) = kI; break;
    case 6: m(1, 2) = m(2, 1) = 1.0; break;
    case 7: m(1, 2) = -kI; m(2, 1) = kI; break;
    case 8: m(0, 0) = m(1, 1) = s3; m(2, 2) = -2.0 * s3; break;
    default: throw std::out_of_range("gellMann index");
  }
  return m;
}

void checkEqual(VerificationReport& report, const std::string& label, const Matrix& lhs,
                const Matrix& rhs) {
  ++report.samples;
  report.record(maxNorm(lhs - rhs), 1.0, false, label);
}

}  // namespace

Su3Operators su3Operators() {
  Su3Operators ops;
  for (int k = 0; k < 3; ++k) ops.t[k] = e3(k + 1, k + 1);

  // (i, j) pair that carries index k: L1, M1 <-> (2,3); L2, M2 <-> (1,3);
  // L3, M3 <-> (1,2).
  const int pairI[3] = {2, 1, 1};
  const int pairJ[3] = {3, 3, 2};
  for (int k = 0; k < 3; ++k) {
    const Matrix eij = e3(pairI[k], pairJ[k]);
    const Matrix eji = e3(pairJ[k], pairI[k]);
    ops.l[k] = -kI * (eij - eji);
    ops.m[k] = eij + eji;
  }
  for (int a = 0; a < 8; ++a) {
    ops.lambda[a] = gellMann(a + 1);
    ops.f[a] = 0.5 * ops.lambda[a];
  }
  ops.h1 = ops.f[2];
  ops.h2 = ops.f[7];
  ops.ladder = ladderOperators(ops);
  ops.alpha1 = {0.5, std::sqrt(3.0) / 2.0};
  ops.alpha2 = {0.5, -std::sqrt(3.0) / 2.0};
  return ops;
}

LadderOperators ladderOperators(const Su3Operators& ops) {
  const auto& l = ops.l;
  const auto& m = ops.m;
  LadderOperators out;
  out.iPlus = 0.5 * (m[2] + kI * l[2]);
  out.iMinus = 0.5 * (m[2] - kI * l[2]);
  out.vPlus = 0.5 * (m[1] + kI * l[1]);
  out.vMinus = 0.5 * (m[1] - kI * l[1]);
  out.uPlus = 0.5 * (m[0] + kI * l[0]);
  out.uMinus = 0.5 * (m[0] - kI * l[0]);
  return out;
}

VerificationReport verifyCommutatorTable(const Su3Operators& ops) {
  VerificationReport report;
  report.check = "commutator-table";
  report.tolerance = kExactTol;

  const auto& L = ops.l;
  const auto& M = ops.m;
  const auto& T = ops.t;
  const Matrix zero = Matrix::Zero(3, 3);

  // Operators are indexed 0..8 as L1..L3, M1..M3, T1..T3.
  const std::array<const Matrix*, 9> all = {&L[0], &L[1], &L[2], &M[0], &M[1],
                                            &M[2], &T[0], &T[1], &T[2]};
  const std::array<std::string, 9> names = {"L1", "L2", "L3", "M1", "M2", "M3", "T1", "T2", "T3"};
  bool listed[9][9] = {};

  struct Entry {
    int a, b;
    Matrix expected;
  };
  const std::vector<Entry> table = {
      // [L_k, L_l] = -i L_m, (k, l, m) cyclic
      {0, 1, -kI * L[2]},
      {1, 2, -kI * L[0]},
      {2, 0, -kI * L[1]},
      // [M_k, M_l] = -i L_m, k < l
      {3, 4, -kI * L[2]},
      {3, 5, -kI * L[1]},
      {4, 5, -kI * L[0]},
      // mixed L-M
      {0, 4, -kI * M[2]},
      {1, 3, -kI * M[2]},
      {0, 5, kI * M[1]},
      {2, 3, -kI * M[1]},
      {1, 5, kI * M[0]},
      {2, 4, kI * M[0]},
      {0, 3, 2.0 * kI * (T[2] - T[1])},
      {1, 4, 2.0 * kI * (T[2] - T[0])},
      {2, 5, 2.0 * kI * (T[1] - T[0])},
      // [L, T]
      {0, 7, kI * M[0]},
      {0, 8, -kI * M[0]},
      {1, 8, -kI * M[1]},
      {1, 6, kI * M[1]},
      {2, 6, kI * M[2]},
      {2, 7, -kI * M[2]},
      // [M, T]
      {3, 7, -kI * L[0]},
      {3, 8, kI * L[0]},
      {4, 8, kI * L[1]},
      {4, 6, -kI * L[1]},
      {5, 6, -kI * L[2]},
      {5, 7, kI * L[2]},
  };

  for (const Entry& e : table) {
    listed[e.a][e.b] = listed[e.b][e.a] = true;
    checkEqual(report, "[" + names[e.a] + "," + names[e.b] + "]", commutator(*all[e.a], *all[e.b]),
               e.expected);
  }

  const Matrix lSquared = L[0] * L[0] + L[1] * L[1] + L[2] * L[2];
  const Matrix mSquared = M[0] * M[0] + M[1] * M[1] + M[2] * M[2];
  for (int k = 0; k < 3; ++k) {
    const std::string idx = std::to_string(k + 1);
    checkEqual(report, "[L" + idx + ",L^2]", commutator(L[k], lSquared), zero);
    checkEqual(report, "[L" + idx + ",M^2]", commutator(L[k], mSquared), zero);
    checkEqual(report, "[M" + idx + ",M^2]", commutator(M[k], mSquared), zero);
    checkEqual(report, "[M" + idx + ",L^2]", commutator(M[k], lSquared), zero);
  }

  // Everything not listed must vanish.
  for (int a = 0; a < 9; ++a) {
    for (int b = a + 1; b < 9; ++b) {
      if (listed[a][b]) continue;
      checkEqual(report, "[" + names[a] + "," + names[b] + "]=0", commutator(*all[a], *all[b]),
                 zero);
    }
  }
  return report;
}

VerificationReport verifyNotationIdentities(const Su3Operators& ops) {
  VerificationReport report;
  report.check = "notation-identities";
  report.tolerance = kExactTol;
  const Matrix zero = Matrix::Zero(3, 3);

  for (int k = 0; k < 3; ++k) {
    const std::string idx = std::to_string(k + 1);
    checkEqual(report, "L" + idx + " hermitian", ops.l[k] - ops.l[k].adjoint(), zero);
    checkEqual(report, "M" + idx + " hermitian", ops.m[k] - ops.m[k].adjoint(), zero);
    checkEqual(report, "T" + idx + " hermitian", ops.t[k] - ops.t[k].adjoint(), zero);
  }
  for (int a = 0; a < 8; ++a) {
    checkEqual(report, "lambda" + std::to_string(a + 1) + " hermitian",
               ops.lambda[a] - ops.lambda[a].adjoint(), zero);
  }

  // iL/iM against Gell-Mann, and the L = 2F table.
  const int lToLambda[3] = {7, 5, 2};
  const int mToLambda[3] = {6, 4, 1};
  for (int k = 0; k < 3; ++k) {
    const std::string idx = std::to_string(k + 1);
    checkEqual(report, "L" + idx + "=lambda" + std::to_string(lToLambda[k]), ops.l[k],
               ops.lambda[lToLambda[k] - 1]);
    checkEqual(report, "M" + idx + "=lambda" + std::to_string(mToLambda[k]), ops.m[k],
               ops.lambda[mToLambda[k] - 1]);
    checkEqual(report, "L" + idx + "=2F", ops.l[k], 2.0 * ops.f[lToLambda[k] - 1]);
    checkEqual(report, "M" + idx + "=2F", ops.m[k], 2.0 * ops.f[mToLambda[k] - 1]);
  }
  checkEqual(report, "iL3=E12-E21", kI * ops.l[2], e3(1, 2) - e3(2, 1));
  checkEqual(report, "iL2=E13-E31", kI * ops.l[1], e3(1, 3) - e3(3, 1));
  checkEqual(report, "iL1=E23-E32", kI * ops.l[0], e3(2, 3) - e3(3, 2));
  checkEqual(report, "iM3=i(E12+E21)", kI * ops.m[2], kI * (e3(1, 2) + e3(2, 1)));
  checkEqual(report, "iM2=i(E13+E31)", kI * ops.m[1], kI * (e3(1, 3) + e3(3, 1)));
  checkEqual(report, "iM1=i(E23+E32)", kI * ops.m[0], kI * (e3(2, 3) + e3(3, 2)));

  const LadderOperators& lad = ops.ladder;
  checkEqual(report, "I+=E12", lad.iPlus, e3(1, 2));
  checkEqual(report, "I-=E21", lad.iMinus, e3(2, 1));
  checkEqual(report, "V+=E13", lad.vPlus, e3(1, 3));
  checkEqual(report, "V-=E31", lad.vMinus, e3(3, 1));
  checkEqual(report, "U+=E23", lad.uPlus, e3(2, 3));
  checkEqual(report, "U-=E32", lad.uMinus, e3(3, 2));
  checkEqual(report, "I+ dagger = I-", lad.iPlus.adjoint(), lad.iMinus);
  checkEqual(report, "U+ dagger = U-", lad.uPlus.adjoint(), lad.uMinus);
  checkEqual(report, "V+ dagger = V-", lad.vPlus.adjoint(), lad.vMinus);

  // Inversion back to L and M.
  checkEqual(report, "iL3=I+-I-", kI * ops.l[2], lad.iPlus - lad.iMinus);
  checkEqual(report, "iL2=V+-V-", kI * ops.l[1], lad.vPlus - lad.vMinus);
  checkEqual(report, "iL1=U+-U-", kI * ops.l[0], lad.uPlus - lad.uMinus);
  checkEqual(report, "iM3=i(I++I-)", kI * ops.m[2], kI * (lad.iPlus + lad.iMinus));
  checkEqual(report, "iM2=i(V++V-)", kI * ops.m[1], kI * (lad.vPlus + lad.vMinus));
  checkEqual(report, "iM1=i(U++U-)", kI * ops.m[0], kI * (lad.uPlus + lad.uMinus));

  // sqrt6-normalized step operators, E_a = (M + iL)/(2 sqrt6) = ladder/sqrt6,
  // and back: M = sqrt6 (E_a + E_-a), L = lSign * (-i) sqrt6 (E_a - E_-a).
  // For alpha2 the raising operator is U-, so E_a - E_-a = -iL1 and the L
  // line carries the opposite sign.
  const double s6 = std::sqrt(6.0);
  const auto cwPair = [&](const Matrix& raising, const Matrix& lowering, int k, double lSign,
                          const std::string& name) {
    const Matrix ea = kCartanWeylScale * raising;
    const Matrix emA = kCartanWeylScale * lowering;
    const std::string idx = std::to_string(k + 1);
    checkEqual(report, "E_" + name + "=(M" + idx + "+-iL" + idx + ")/(2sqrt6)", ea,
               (ops.m[k] + lSign * kI * ops.l[k]) / (2.0 * s6));
    checkEqual(report, "E_-" + name + "=(M" + idx + "-+iL" + idx + ")/(2sqrt6)", emA,
               (ops.m[k] - lSign * kI * ops.l[k]) / (2.0 * s6));
    checkEqual(report, "M" + idx + " from E_" + name, ops.m[k], s6 * (ea + emA));
    checkEqual(report, "L" + idx + " from E_" + name, ops.l[k], lSign * -kI * s6 * (ea - emA));
  };
  cwPair(lad.iPlus, lad.iMinus, 2, 1.0, "a1+a2");
  cwPair(lad.vPlus, lad.vMinus, 1, 1.0, "a1");
  cwPair(lad.uMinus, lad.uPlus, 0, -1.0, "a2");

  // I-spin: I1 = M3/2, I2 = L3/2.
  const Matrix i1 = 0.5 * (lad.iPlus + lad.iMinus);
  const Matrix i2 = (1.0 / (2.0 * kI)) * (lad.iPlus - lad.iMinus);
  checkEqual(report, "I1=M3/2", i1, 0.5 * ops.m[2]);
  checkEqual(report, "I2=L3/2", i2, 0.5 * ops.l[2]);
  checkEqual(report, "I1^2+I2^2=(L3^2+M3^2)/4", i1 * i1 + i2 * i2,
             0.25 * (ops.l[2] * ops.l[2] + ops.m[2] * ops.m[2]));
  checkEqual(report, "I3=F3", ops.h1, ops.f[2]);
  return report;
}

VerificationReport verifyRoots(const Su3Operators& ops, std::uint64_t seed) {
  VerificationReport report;
  report.check = "roots";
  report.tolerance = kExactTol;
  report.seed = seed;

  const LadderOperators& lad = ops.ladder;
  const std::array<double, 2> sum = {ops.alpha1[0] + ops.alpha2[0], ops.alpha1[1] + ops.alpha2[1]};
  struct Step {
    const Matrix* op;
    std::array<double, 2> root;
    const char* name;
  };
  const std::array<Step, 6> steps = {{
      {&lad.iPlus, sum, "I+"},
      {&lad.iMinus, {-sum[0], -sum[1]}, "I-"},
      {&lad.vPlus, ops.alpha1, "V+"},
      {&lad.vMinus, {-ops.alpha1[0], -ops.alpha1[1]}, "V-"},
      {&lad.uMinus, ops.alpha2, "U-"},
      {&lad.uPlus, {-ops.alpha2[0], -ops.alpha2[1]}, "U+"},
  }};
  for (const Step& s : steps) {
    checkEqual(report, std::string("[H1,") + s.name + "]", commutator(ops.h1, *s.op),
               s.root[0] * *s.op);
    checkEqual(report, std::string("[H2,") + s.name + "]", commutator(ops.h2, *s.op),
               s.root[1] * *s.op);
  }

  // [H(theta), E_ij] = (theta_i - theta_j) E_ij.
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(-M_PI, M_PI);
  for (int sample = 0; sample < 3; ++sample) {
    RealVector theta(3);
    for (int j = 0; j < 3; ++j) theta(j) = angle(rng);
    const Matrix h = theta.cast<Complex>().asDiagonal();
    for (int i = 1; i <= 3; ++i) {
      for (int j = 1; j <= 3; ++j) {
        if (i == j) continue;
        const Matrix eij = e3(i, j);
        checkEqual(report, "[H(theta),E" + std::to_string(i) + std::to_string(j) + "]",
                   commutator(h, eij), (theta(i - 1) - theta(j - 1)) * eij);
      }
    }
  }
  return report;
}

}  // namespace weyl
