#include "kkth/spectral.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_map>

#include "kkth/crmod.hpp"
#include "kkth/errors.hpp"

namespace kkth::spectral {

using exactalg::IntMatrix;

FgAbGroup E2Page::cell(Part part, int p, int q) const {
  if (p < 0 || p > static_cast<int>(k)) return FgAbGroup();
  const int j = wrap(q, period(part));
  const auto& row = part == Part::Real ? real.at(static_cast<std::size_t>(j))
                                       : complex.at(static_cast<std::size_t>(j));
  return row.at(static_cast<std::size_t>(p)).group;
}

E2Page compute_e2(const kgraph::KGraphSpec& spec, const kgraph::VertexPartition& part) {
  E2Page page;
  page.k = spec.k;
  auto fill = [&](Part which, int j, koszul::GradedChainComplex& cx, std::vector<HomologyGroup>& row) {
    cx = koszul::build_complex(spec, part, j, which);
    for (std::size_t p = 0; p <= spec.k; ++p) row.push_back(exactalg::homology(cx.boundary(p + 1), cx.boundary(p)));
  };
  for (int j = 0; j < 8; ++j) fill(Part::Real, j, page.real_complexes[j], page.real[j]);
  for (int j = 0; j < 2; ++j) fill(Part::Complex, j, page.complex_complexes[j], page.complex[j]);
  return page;
}

std::vector<DifferentialEntry> DifferentialReport::of(Part part) const {
  std::vector<DifferentialEntry> out;
  for (const auto& e : entries)
    if (e.part == part) out.push_back(e);
  return out;
}

DifferentialReport differential_report(const E2Page& page) {
  DifferentialReport report;
  const int k = static_cast<int>(page.k);
  for (Part part : {Part::Real, Part::Complex}) {
    const int m = period(part);
    for (int r = 2; r <= k; ++r) {
      for (int p = r; p <= k; ++p) {
        for (int q = 0; q < m; ++q) {
          const int tq = wrap(q + r - 1, m);
          if (page.cell(part, p, q).is_trivial() || page.cell(part, p - r, tq).is_trivial()) continue;
          report.entries.push_back({r, part, {p, q}, {p - r, tq}});
        }
      }
    }
  }
  return report;
}

const char* status_name(DiagonalStatus s) {
  switch (s) {
    case DiagonalStatus::Determined: return "determined";
    case DiagonalStatus::ExtensionAmbiguous: return "extension_ambiguous";
    case DiagonalStatus::D2Ambiguous: return "d2_ambiguous";
  }
  return "";
}

std::optional<FgAbGroup> DiagonalAssembly::determined() const {
  std::set<FgAbGroup> all;
  for (const auto& v : variants) {
    if (!v.complete) return std::nullopt;
    all.insert(v.candidates.begin(), v.candidates.end());
  }
  if (all.size() != 1) return std::nullopt;
  return *all.begin();
}

namespace {

FgAbGroup torsion_part(const FgAbGroup& g) { return FgAbGroup::from_invariants(g.invariant_factors(), 0); }

// Candidates for the group filtered by the nonzero factors, bottom first.
void resolve_extensions(DiagonalVariant& v, const Integer& bound) {
  std::set<FgAbGroup> current{FgAbGroup()};
  for (const auto& q : v.factors) {
    if (q.is_trivial()) continue;
    std::set<FgAbGroup> next;
    const FgAbGroup qt = torsion_part(q);
    for (const auto& s : current) {
      std::vector<FgAbGroup> ext;
      if (qt.is_trivial() || s.is_trivial()) {
        ext.push_back(FgAbGroup::direct_sum(s, qt));
      } else if (!s.is_finite()) {
        v.complete = false;
        v.note = "extension of a group with free part by torsion is not enumerated";
        v.candidates.clear();
        return;
      } else {
        ext = exactalg::extension_candidates(s, qt, bound);
      }
      // free summands of the quotient split off
      for (const auto& e : ext) next.insert(FgAbGroup::direct_sum(e, FgAbGroup::free(q.free_rank())));
    }
    current = std::move(next);
  }
  v.candidates.assign(current.begin(), current.end());
}

std::string cell_text(const Cell& c) {
  return "(" + std::to_string(c.p) + "," + std::to_string(c.q) + ")";
}

}  // namespace

std::vector<DiagonalAssembly> assemble_diagonals(const E2Page& page, const DifferentialReport& report,
                                                 const AssemblyOptions& opts) {
  std::vector<DiagonalAssembly> out;
  const int k = static_cast<int>(page.k);
  for (Part part : {Part::Real, Part::Complex}) {
    const int m = period(part);
    const auto entries = report.of(part);
    for (int t = 0; t < m; ++t) {
      DiagonalAssembly diag;
      diag.part = part;
      diag.degree = t;
      std::vector<FgAbGroup> base;
      for (int p = 0; p <= k; ++p) base.push_back(page.cell(part, p, t - p));

      struct Touch {
        DifferentialEntry entry;
        bool as_source;
        std::vector<std::optional<GroupHom>> options;  // nullopt: zero map
        bool enumerable = true;
      };
      std::vector<Touch> touches;
      for (const auto& e : entries) {
        const bool src = wrap(e.source.p + e.source.q, m) == t;
        const bool tgt = wrap(e.target.p + e.target.q, m) == t;
        if (!src && !tgt) continue;
        Touch touch{e, src, {std::nullopt}};
        try {
          const FgAbGroup s = page.cell(part, e.source.p, e.source.q);
          const FgAbGroup d = page.cell(part, e.target.p, e.target.q);
          for (auto& h : exactalg::enumerate_homs(s, d, opts.ext_bound))
            if (!h.is_zero()) touch.options.emplace_back(std::move(h));
        } catch (const InfiniteInput&) {
          touch.enumerable = false;
        }
        touches.push_back(std::move(touch));
      }

      std::vector<std::size_t> pick(touches.size(), 0);
      std::vector<DiagonalVariant> variants;
      std::set<std::pair<std::string, std::vector<FgAbGroup>>> seen;
      for (;;) {
        DiagonalVariant v;
        v.factors = base;
        std::vector<int> hits(base.size(), 0);
        std::string label;
        for (std::size_t i = 0; i < touches.size(); ++i) {
          const Touch& tch = touches[i];
          const auto& opt = tch.options[pick[i]];
          std::string piece = "d" + std::to_string(tch.entry.r) + (opt ? "≠0" : "=0");
          if (touches.size() > 1) piece += " at " + cell_text(tch.entry.source) + "->" + cell_text(tch.entry.target);
          label += (label.empty() ? "" : ", ") + piece;
          if (!opt) continue;
          const int p = tch.as_source ? tch.entry.source.p : tch.entry.target.p;
          v.factors[static_cast<std::size_t>(p)] =
              tch.as_source ? exactalg::kernel_group(*opt) : exactalg::cokernel_group(*opt);
          if (++hits[static_cast<std::size_t>(p)] > 1) {
            v.complete = false;
            v.note = "cell (" + std::to_string(p) + "," + std::to_string(wrap(t - p, m)) +
                     ") meets two nonzero differentials";
          }
        }
        v.label = label.empty() ? "d2=0" : label;
        if (seen.insert({v.label, v.factors}).second) {
          if (v.complete) resolve_extensions(v, opts.ext_bound);
          variants.push_back(std::move(v));
        }
        std::size_t i = 0;
        while (i < touches.size()) {
          if (++pick[i] < touches[i].options.size()) break;
          pick[i] = 0;
          ++i;
        }
        if (i == touches.size()) break;
      }
      for (const auto& tch : touches) {
        if (tch.enumerable) continue;
        DiagonalVariant v;
        v.label = "d" + std::to_string(tch.entry.r) + "≠0";
        v.factors = base;
        v.complete = false;
        v.note = "nonzero maps " + cell_text(tch.entry.source) + "->" + cell_text(tch.entry.target) +
                 " between groups with free part are not enumerated";
        variants.push_back(std::move(v));
      }
      diag.variants = std::move(variants);
      if (diag.variants.size() > 1) {
        diag.status = DiagonalStatus::D2Ambiguous;
      } else if (diag.variants[0].complete && diag.variants[0].candidates.size() == 1) {
        diag.status = DiagonalStatus::Determined;
      } else {
        diag.status = DiagonalStatus::ExtensionAmbiguous;
      }
      out.push_back(std::move(diag));
    }
  }
  return out;
}

KuData compute_ku_with_psi(const kgraph::KGraphSpec& spec, const kgraph::VertexPartition& part,
                           const E2Page& page, const DifferentialReport& report) {
  if (!report.of(Part::Complex).empty()) {
    throw AmbiguousComplexPart("a complex differential may be nonzero");
  }
  const int k = static_cast<int>(spec.k);
  const GroupHom psi_a = crmod::psi_on_A(part);
  KuData out;
  for (int q = 0; q < 8; ++q) {
    int found = -1;
    for (int p = 0; p <= k; ++p) {
      if (page.cell(Part::Complex, p, q - p).is_trivial()) continue;
      if (found >= 0) {
        throw AmbiguousComplexPart("diagonal " + std::to_string(q) + " has several nonzero factors");
      }
      found = p;
    }
    out.filtration[q] = found;
    if (found < 0) {
      out.ku[q] = FgAbGroup();
      out.psi[q] = GroupHom::identity(FgAbGroup());
      continue;
    }
    const HomologyGroup& h = page.complex[wrap(q - found, 2)][static_cast<std::size_t>(found)];
    const std::size_t copies = koszul::index_set(spec.k, static_cast<std::size_t>(found)).size();
    const auto& chain = page.complex_complexes[wrap(q - found, 2)].groups[static_cast<std::size_t>(found)];
    IntMatrix blocks = exactalg::block_diagonal(std::vector<IntMatrix>(copies, psi_a.matrix()));
    GroupHom induced = exactalg::induced_hom(GroupHom(chain, chain, blocks), h, h);
    const int half = (q - found) / 2;
    const Integer sign = (wrap(half, 2) == 0) ? 1 : -1;
    out.ku[q] = h.group;
    out.psi[q] = GroupHom(h.group, h.group, sign * induced.matrix());
  }
  return out;
}

std::array<FgAbGroup, 8> compute_mu(const KuData& ku) {
  std::array<FgAbGroup, 8> mu;
  for (int q = 0; q < 8; ++q) {
    const FgAbGroup& g = ku.ku[q];
    const IntMatrix id = IntMatrix::identity(g.ambient_rank());
    const IntMatrix& psi = ku.psi[q].matrix();
    GroupHom plus(g, g, id + psi);
    GroupHom minus(g, g, id - psi);
    mu[q] = exactalg::homology(plus, minus).group;
  }
  return mu;
}

const char* arrow_name(Arrow a) {
  switch (a) {
    case Arrow::Eta: return "eta";
    case Arrow::C: return "c";
    case Arrow::R: return "r";
  }
  return "";
}

unsigned elementary_rank(const FgAbGroup& g) {
  if (!g.is_finite()) throw NoSolution(g.to_string() + " is not an elementary 2-group");
  for (const auto& d : g.invariant_factors())
    if (d != 2) throw NoSolution(g.to_string() + " is not an elementary 2-group");
  return static_cast<unsigned>(g.invariant_factors().size());
}

namespace {

using Ranks = std::array<unsigned, 8>;

// One parity class of the sequence: eta_i, MU_i for i of that parity.
struct CycleChoice {
  Ranks mo{};
  Ranks eta{}, c{}, r{};
};

int w8(int i) { return wrap(i, 8); }

std::vector<CycleChoice> enumerate_cycle(int parity, const Ranks& mu, unsigned limit) {
  std::vector<CycleChoice> out;
  const int idx[4] = {parity, parity + 2, parity + 4, parity + 6};
  std::array<unsigned, 4> x{}, e{};
  std::function<void(int)> rec = [&](int level) {
    if (level == 8) {
      CycleChoice ch;
      for (int a = 0; a < 4; ++a) {
        const int i = idx[a];
        ch.eta[i] = e[a];
        ch.c[w8(i + 1)] = x[a];       // c_{i+1} : MO_{i+1} -> MU_i
        ch.r[i] = mu[i] - x[a];       // r_i : MU_i -> MO_{i-2}
      }
      for (int a = 0; a < 4; ++a) {
        const int i = idx[a];
        ch.mo[i] = ch.r[w8(i + 2)] + ch.eta[i];
        ch.mo[w8(i + 1)] = ch.eta[i] + ch.c[w8(i + 1)];
      }
      out.push_back(ch);
      return;
    }
    if (level < 4) {
      for (unsigned v = 0; v <= mu[idx[level]]; ++v) {
        x[level] = v;
        rec(level + 1);
      }
    } else {
      for (unsigned v = 0; v <= limit; ++v) {
        e[level - 4] = v;
        rec(level + 1);
      }
    }
  };
  rec(0);
  return out;
}

bool satisfies(const Ranks& mu, const CoreConstraints& cons, const CoreSolution& s) {
  for (const auto& [q, rank] : cons.mo_rank)
    if (s.mo[w8(q)] != rank) return false;
  for (int i = 0; i < 8; ++i) {
    if (s.eta[i] + s.eta[w8(i + 1)] + s.eta[w8(i + 2)] > s.mo[w8(i + 1)] + s.mo[w8(i + 2)]) return false;
  }
  for (const auto& a : cons.arrows) {
    const int i = w8(a.index);
    unsigned rank = 0, src = 0, tgt = 0;
    switch (a.arrow) {
      case Arrow::Eta: rank = s.eta[i]; src = s.mo[i]; tgt = s.mo[w8(i + 1)]; break;
      case Arrow::C: rank = s.c[i]; src = s.mo[i]; tgt = mu[w8(i - 1)]; break;
      case Arrow::R: rank = s.r[i]; src = mu[i]; tgt = s.mo[w8(i - 2)]; break;
    }
    switch (a.property) {
      case ArrowProperty::Zero: if (rank != 0) return false; break;
      case ArrowProperty::Injective: if (rank != src) return false; break;
      case ArrowProperty::Surjective: if (rank != tgt) return false; break;
    }
  }
  return true;
}

}  // namespace

std::vector<CoreSolution> enumerate_core_solutions(const Ranks& mu, const CoreConstraints& constraints,
                                                   const CoreOptions& opts) {
  const unsigned limit = opts.bound + 1;
  const auto even = enumerate_cycle(0, mu, limit);
  const auto odd = enumerate_cycle(1, mu, limit);
  std::map<Ranks, std::vector<const CycleChoice*>> by_mo;
  for (const auto& ch : odd) by_mo[ch.mo].push_back(&ch);

  std::map<Ranks, CoreSolution> found;
  for (const auto& ev : even) {
    auto it = by_mo.find(ev.mo);
    if (it == by_mo.end()) continue;
    for (const CycleChoice* od : it->second) {
      CoreSolution s;
      s.mo = ev.mo;
      for (int i = 0; i < 8; ++i) {
        const bool even_eta = i % 2 == 0;
        s.eta[i] = even_eta ? ev.eta[i] : od->eta[i];
        s.c[i] = even_eta ? od->c[i] : ev.c[i];  // c_i lands in MU_{i-1}
        s.r[i] = even_eta ? ev.r[i] : od->r[i];
      }
      if (!satisfies(mu, constraints, s)) continue;
      for (unsigned d : s.mo) {
        if (d > opts.bound) throw BoundExceeded("core solution with rank above " + std::to_string(opts.bound));
      }
      found.emplace(s.mo, s);
    }
  }
  if (found.empty()) throw NoSolution("core sequence constraints are inconsistent");
  std::vector<CoreSolution> out;
  for (auto& [mo, s] : found) out.push_back(s);
  return out;
}

bool verify_core_certificate(const Ranks& mu, const CoreConstraints& constraints, const CoreSolution& s) {
  // Walk  MO_i -> MO_{i+1} -> MU_i -> MO_{i-2} -> ...  starting from i = 0 and i = 1;
  // each start closes up after twelve terms.
  struct Term {
    unsigned dim;
    unsigned out;  // rank of the map leaving this term
  };
  for (int start : {0, 1}) {
    std::vector<Term> seq;
    for (int step = 0; step < 4; ++step) {
      const int i = w8(start - 2 * step);
      seq.push_back({s.mo[i], s.eta[i]});
      seq.push_back({s.mo[w8(i + 1)], s.c[w8(i + 1)]});
      seq.push_back({mu[i], s.r[i]});
    }
    for (std::size_t t = 0; t < seq.size(); ++t) {
      const Term& prev = seq[(t + seq.size() - 1) % seq.size()];
      const Term& next = seq[(t + 1) % seq.size()];
      if (seq[t].out > seq[t].dim || seq[t].out > next.dim) return false;
      if (seq[t].dim != prev.out + seq[t].out) return false;
    }
  }
  return satisfies(mu, constraints, s);
}

}  // namespace kkth::spectral
