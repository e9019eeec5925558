#include "kkth/crmod.hpp"

#include "kkth/errors.hpp"

namespace kkth::crmod {

namespace {

using exactalg::Integer;

FgAbGroup z() { return FgAbGroup::free(1); }
FgAbGroup z2() { return FgAbGroup::cyclic(2); }
FgAbGroup zero() { return FgAbGroup(); }


IntMatrix sized(const FgAbGroup& tgt, const FgAbGroup& src, std::initializer_list<std::initializer_list<long>> rows) {
  if (tgt.ambient_rank() == 0 || src.ambient_rank() == 0) return IntMatrix(tgt.ambient_rank(), src.ambient_rank());
  return IntMatrix::from_rows(rows);
}

// Reduce the listed rows to representatives in [0, 2).
void reduce_rows_mod2(IntMatrix& m, std::size_t first, std::size_t count) {
  for (std::size_t i = first; i < first + count; ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      mpz_fdiv_r_ui(m(i, j).get_mpz_t(), m(i, j).get_mpz_t(), 2);
    }
  }
}

IntMatrix block2(const IntMatrix& a, const IntMatrix& b, const IntMatrix& c, const IntMatrix& d) {
  return vstack(hstack(a, b), hstack(c, d));
}

}  // namespace

CrBlockTables standard_tables() {
  CrBlockTables t;
  CrBlock& R = t.real;
  R.name = "R";
  R.ko = {z(), z2(), z2(), zero(), z(), zero(), zero(), zero()};
  R.ku = {z(), zero(), z(), zero(), z(), zero(), z(), zero()};
  const long eta[8] = {1, 1, 0, 0, 0, 0, 0, 0};
  const long c[8] = {1, 0, 0, 0, 2, 0, 0, 0};
  const long r[8] = {2, 0, 1, 0, 1, 0, 0, 0};
  const long psi[8] = {1, 0, -1, 0, 1, 0, -1, 0};
  for (int n = 0; n < 8; ++n) {
    R.eta[n] = sized(R.ko[(n + 1) % 8], R.ko[n], {{eta[n]}});
    R.c[n] = sized(R.ku[n], R.ko[n], {{c[n]}});
    R.r[n] = sized(R.ko[n], R.ku[n], {{r[n]}});
    R.psi[n] = sized(R.ku[n], R.ku[n], {{psi[n]}});
  }

  CrBlock& C = t.complex;
  C.name = "C";
  const FgAbGroup z_2 = FgAbGroup::free(2);
  for (int n = 0; n < 8; ++n) {
    const bool even = n % 2 == 0;
    C.ko[n] = even ? z() : zero();
    C.ku[n] = even ? z_2 : zero();
  }
  for (int n = 0; n < 8; ++n) {
    const long s = (n % 4 == 0) ? 1 : -1;
    C.eta[n] = IntMatrix(C.ko[(n + 1) % 8].ambient_rank(), C.ko[n].ambient_rank());
    C.c[n] = sized(C.ku[n], C.ko[n], {{s}, {1}});
    C.r[n] = sized(C.ko[n], C.ku[n], {{s, 1}});
    C.psi[n] = sized(C.ku[n], C.ku[n], {{0, s}, {s, 0}});
  }
  return t;
}

bool RelationReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

std::vector<RelationCheck> RelationReport::failures() const {
  std::vector<RelationCheck> out;
  for (const auto& c : checks)
    if (!c.pass) out.push_back(c);
  return out;
}

namespace {

void check_block(const CrBlock& b, RelationReport& report) {
  auto hom = [](const FgAbGroup& s, const FgAbGroup& t, const IntMatrix& m) {
    return GroupHom(s, t, m);
  };
  auto record = [&](const std::string& rel, int n, auto&& test) {
    bool ok = false;
    try {
      ok = test();
    } catch (const Error&) {
      ok = false;
    }
    report.checks.push_back({b.name, rel, n, ok});
  };
  for (int n = 0; n < 8; ++n) {
    const int n1 = (n + 1) % 8, n2 = (n + 2) % 8, n3 = (n + 3) % 8;
    record("rc = 2", n, [&] {
      GroupHom rc = exactalg::compose(hom(b.ku[n], b.ko[n], b.r[n]), hom(b.ko[n], b.ku[n], b.c[n]));
      IntMatrix two = Integer(2) * IntMatrix::identity(b.ko[n].ambient_rank());
      return rc.equals(hom(b.ko[n], b.ko[n], two));
    });
    record("cr = 1 + psi", n, [&] {
      GroupHom cr = exactalg::compose(hom(b.ko[n], b.ku[n], b.c[n]), hom(b.ku[n], b.ko[n], b.r[n]));
      IntMatrix rhs = IntMatrix::identity(b.ku[n].ambient_rank()) + b.psi[n];
      return cr.equals(hom(b.ku[n], b.ku[n], rhs));
    });
    record("2 eta = 0", n, [&] {
      return hom(b.ko[n], b.ko[n1], Integer(2) * b.eta[n]).is_zero();
    });
    record("eta r = 0", n, [&] {
      return exactalg::compose(hom(b.ko[n], b.ko[n1], b.eta[n]), hom(b.ku[n], b.ko[n], b.r[n])).is_zero();
    });
    record("c eta = 0", n, [&] {
      return exactalg::compose(hom(b.ko[n1], b.ku[n1], b.c[n1]), hom(b.ko[n], b.ko[n1], b.eta[n])).is_zero();
    });
    record("eta^3 = 0", n, [&] {
      GroupHom e2 = exactalg::compose(hom(b.ko[n1], b.ko[n2], b.eta[n1]), hom(b.ko[n], b.ko[n1], b.eta[n]));
      return exactalg::compose(hom(b.ko[n2], b.ko[n3], b.eta[n2]), e2).is_zero();
    });
    record("psi c = c", n, [&] {
      GroupHom pc = exactalg::compose(hom(b.ku[n], b.ku[n], b.psi[n]), hom(b.ko[n], b.ku[n], b.c[n]));
      return pc.equals(hom(b.ko[n], b.ku[n], b.c[n]));
    });
    record("r psi = r", n, [&] {
      GroupHom rp = exactalg::compose(hom(b.ku[n], b.ko[n], b.r[n]), hom(b.ku[n], b.ku[n], b.psi[n]));
      return rp.equals(hom(b.ku[n], b.ko[n], b.r[n]));
    });
    record("psi^2 = 1", n, [&] {
      GroupHom p = hom(b.ku[n], b.ku[n], b.psi[n]);
      return exactalg::compose(p, p).equals(GroupHom::identity(b.ku[n]));
    });
  }
}

}  // namespace

RelationReport check_cr_relations(const CrBlockTables& tables) {
  RelationReport report;
  check_block(tables.real, report);
  check_block(tables.complex, report);
  return report;
}

GradedGroupA build_graded_group(const kgraph::VertexPartition& part) {
  GradedGroupA a;
  a.f = part.g_f.size();
  a.g1 = part.g_1.size();
  const std::size_t f = a.f, g = a.g1;
  auto torsion2 = [](std::size_t n) {
    return FgAbGroup(n, exactalg::Integer(2) * IntMatrix::identity(n));
  };
  a.real[0] = FgAbGroup::free(f + g);
  a.real[1] = torsion2(f);
  a.real[2] = FgAbGroup::direct_sum(torsion2(f), FgAbGroup::free(g));
  a.real[3] = FgAbGroup();
  a.real[4] = FgAbGroup::free(f + g);
  a.real[5] = FgAbGroup();
  a.real[6] = FgAbGroup::free(g);
  a.real[7] = FgAbGroup();
  a.complex[0] = FgAbGroup::free(f + 2 * g);
  a.complex[1] = FgAbGroup();
  return a;
}

RhoMap build_rho(const kgraph::KGraphSpec& spec, const kgraph::VertexPartition& part,
                 std::size_t color) {
  const kgraph::BlockDecomposition b = kgraph::block_decompose(spec, part, color);
  const std::size_t f = part.g_f.size(), g = part.g_1.size();
  const Integer two = 2;
  RhoMap rho;
  rho.color = color;
  rho.real[0] = block2(b.b11, two * b.b12, b.b21, b.b22 + b.b23);
  rho.real[1] = b.b11;
  reduce_rows_mod2(rho.real[1], 0, f);
  rho.real[2] = block2(b.b11, b.b12, IntMatrix(g, f), b.b22 - b.b23);
  reduce_rows_mod2(rho.real[2], 0, f);
  rho.real[3] = IntMatrix(0, 0);
  rho.real[4] = block2(b.b11, b.b12, two * b.b21, b.b22 + b.b23);
  rho.real[5] = IntMatrix(0, 0);
  rho.real[6] = b.b22 - b.b23;
  rho.real[7] = IntMatrix(0, 0);
  rho.complex[0] = b.reassemble();
  rho.complex[1] = IntMatrix(0, 0);
  return rho;
}

GroupHom RhoMap::real_hom(const GradedGroupA& a, int degree) const {
  const auto& g = a.real.at(static_cast<std::size_t>(degree));
  return GroupHom(g, g, real.at(static_cast<std::size_t>(degree)));
}

GroupHom RhoMap::complex_hom(const GradedGroupA& a, int degree) const {
  const auto& g = a.complex.at(static_cast<std::size_t>(degree));
  return GroupHom(g, g, complex.at(static_cast<std::size_t>(degree)));
}

GroupHom psi_on_A(const kgraph::VertexPartition& part) {
  const std::size_t f = part.g_f.size(), g = part.g_1.size();
  IntMatrix p(f + 2 * g, f + 2 * g);
  for (std::size_t i = 0; i < f; ++i) p(i, i) = 1;
  for (std::size_t i = 0; i < g; ++i) {
    p(f + i, f + g + i) = 1;
    p(f + g + i, f + i) = 1;
  }
  FgAbGroup a = FgAbGroup::free(f + 2 * g);
  return GroupHom(a, a, p);
}

IntMatrix complexification_degree0(const kgraph::VertexPartition& part) {
  const std::size_t f = part.g_f.size(), g = part.g_1.size();
  IntMatrix c(f + 2 * g, f + g);
  for (std::size_t i = 0; i < f; ++i) c(i, i) = 1;
  for (std::size_t i = 0; i < g; ++i) {
    c(f + i, f + i) = 1;
    c(f + g + i, f + i) = 1;
  }
  return c;
}

}  // namespace kkth::crmod
