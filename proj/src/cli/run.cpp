#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "kkth/cli.hpp"
#include "kkth/exactalg/smith.hpp"

namespace kkth::cli {

using nlohmann::ordered_json;
using exactalg::FgAbGroup;
using exactalg::GroupHom;
using exactalg::Integer;
using exactalg::IntMatrix;
using koszul::Part;
using spectral::DiagonalAssembly;

namespace {

const char* const kInvolutionCaveat =
    "computed from the vertex involution only; valid for any factorization rules compatible with it";

struct Report {
  JobInput input;
  kgraph::VertexPartition part;
  spectral::E2Page page;
  spectral::DifferentialReport diffs;
  std::vector<DiagonalAssembly> diagonals;
  std::optional<spectral::KuData> ku;
  std::string complex_note;
  std::array<FgAbGroup, 8> mu;
  std::array<unsigned, 8> mu_rank{};
  spectral::CoreConstraints constraints;
  std::map<int, std::string> constraint_source;
  std::vector<spectral::CoreSolution> core;
};

bool odd_order_everywhere(const DiagonalAssembly& d) {
  for (const auto& v : d.variants) {
    if (!v.complete || v.candidates.empty()) return false;
    for (const auto& g : v.candidates) {
      if (!g.is_finite() || mpz_odd_p(g.order().get_mpz_t()) == 0) return false;
    }
  }
  return true;
}

Report compute(const JobInput& input, const JobConfig& config) {
  Report rep;
  rep.input = input;
  rep.part = kgraph::validate(input.spec);
  rep.page = spectral::compute_e2(input.spec, rep.part);
  rep.diffs = spectral::differential_report(rep.page);
  rep.diagonals = spectral::assemble_diagonals(rep.page, rep.diffs, {config.ext_bound});
  try {
    rep.ku = spectral::compute_ku_with_psi(input.spec, rep.part, rep.page, rep.diffs);
  } catch (const AmbiguousComplexPart& e) {
    rep.complex_note = e.what();
    return rep;
  }
  rep.mu = spectral::compute_mu(*rep.ku);
  for (int q = 0; q < 8; ++q) rep.mu_rank[q] = spectral::elementary_rank(rep.mu[q]);

  // KO_q of odd order kills MO_q and MO_{q+1}.
  for (const auto& d : rep.diagonals) {
    if (d.part != Part::Real || !odd_order_everywhere(d)) continue;
    for (int q : {d.degree, spectral::wrap(d.degree + 1, 8)}) {
      rep.constraints.mo_rank[q] = 0;
      rep.constraint_source[q] = "KO_" + std::to_string(d.degree) + " has odd order";
    }
  }
  for (const auto& [q, r] : input.constraints.mo_rank) {
    auto it = rep.constraints.mo_rank.find(q);
    if (it != rep.constraints.mo_rank.end() && it->second != r) {
      throw NoSolution("input constraint MO_" + std::to_string(q) + " = " + std::to_string(r) +
                       " contradicts " + rep.constraint_source[q]);
    }
    rep.constraints.mo_rank[q] = r;
    if (!rep.constraint_source.count(q)) rep.constraint_source[q] = "input";
  }
  rep.constraints.arrows = input.constraints.arrows;
  rep.core = spectral::enumerate_core_solutions(rep.mu_rank, rep.constraints, {config.core_bound});
  return rep;
}

// ---- shared helpers

std::optional<int> scalar_of(const GroupHom& h) {
  const FgAbGroup& g = h.source();
  const IntMatrix id = IntMatrix::identity(g.ambient_rank());
  if (h.equals(GroupHom(g, g, id))) return 1;
  if (h.equals(GroupHom(g, g, Integer(-1) * id))) return -1;
  return std::nullopt;
}

std::string arrow_text(const spectral::ArrowConstraint& a) {
  const char* prop = a.property == spectral::ArrowProperty::Zero        ? "zero"
                     : a.property == spectral::ArrowProperty::Injective ? "injective"
                                                                        : "surjective";
  return std::string(spectral::arrow_name(a.arrow)) + "_" + std::to_string(a.index) + " " + prop;
}

ordered_json int_json(const Integer& x) {
  if (mpz_fits_slong_p(x.get_mpz_t())) return x.get_si();
  return x.get_str();
}

ordered_json matrix_json(const IntMatrix& m) {
  ordered_json rows = ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(int_json(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

std::string group_list(const std::vector<FgAbGroup>& gs, const char* sep) {
  std::string out;
  for (const auto& g : gs) out += (out.empty() ? "" : sep) + g.to_string();
  return out;
}

// ---- json

ordered_json diagonal_json(const DiagonalAssembly& d) {
  ordered_json j;
  j["degree"] = d.degree;
  j["status"] = spectral::status_name(d.status);
  if (auto g = d.determined()) {
    j["group"] = g->to_string();
  } else {
    j["group"] = nullptr;
  }
  ordered_json vars = ordered_json::array();
  for (const auto& v : d.variants) {
    ordered_json vj;
    vj["label"] = v.label;
    ordered_json f = ordered_json::array();
    for (const auto& g : v.factors) f.push_back(g.to_string());
    vj["factors"] = f;
    ordered_json c = ordered_json::array();
    for (const auto& g : v.candidates) c.push_back(g.to_string());
    vj["candidates"] = c;
    vj["complete"] = v.complete;
    if (!v.note.empty()) vj["note"] = v.note;
    vars.push_back(vj);
  }
  j["variants"] = vars;
  return j;
}

ordered_json complex_json(const koszul::GradedChainComplex& cx) {
  ordered_json j;
  ordered_json groups = ordered_json::array();
  for (const auto& g : cx.groups) groups.push_back(g.to_string());
  j["groups"] = groups;
  ordered_json bd = ordered_json::array();
  for (std::size_t p = 1; p <= cx.k; ++p) bd.push_back(matrix_json(cx.boundary(p).matrix()));
  j["boundaries"] = bd;
  return j;
}

ordered_json to_json(const Report& rep, const JobConfig& config) {
  const auto& spec = rep.input.spec;
  ordered_json j;
  j["schema"] = "kkth/1";
  j["input"] = {{"k", spec.k}, {"vertices", spec.vertices}, {"involution", spec.involution}};

  ordered_json val;
  val["status"] = "ok";
  ordered_json fixed = ordered_json::array();
  for (auto v : rep.part.g_f) fixed.push_back(spec.vertices[v]);
  ordered_json swapped = ordered_json::array();
  for (std::size_t i = 0; i < rep.part.g_1.size(); ++i)
    swapped.push_back({spec.vertices[rep.part.g_1[i]], spec.vertices[rep.part.g_2[i]]});
  val["fixed"] = fixed;
  val["swapped"] = swapped;
  j["validation"] = val;
  j["notes"] = ordered_json::array({kInvolutionCaveat});

  ordered_json e2;
  for (Part part : {Part::Real, Part::Complex}) {
    ordered_json rows = ordered_json::array();
    for (int q = 0; q < spectral::period(part); ++q) {
      ordered_json row = ordered_json::array();
      for (int p = 0; p <= static_cast<int>(spec.k); ++p) row.push_back(rep.page.cell(part, p, q).to_string());
      rows.push_back(row);
    }
    e2[koszul::part_name(part)] = rows;
  }
  j["e2"] = e2;

  ordered_json diffs = ordered_json::array();
  for (const auto& e : rep.diffs.entries) {
    diffs.push_back({{"r", e.r},
                     {"part", koszul::part_name(e.part)},
                     {"source", {e.source.p, e.source.q}},
                     {"target", {e.target.p, e.target.q}}});
  }
  j["differentials"] = diffs;

  ordered_json diags;
  for (Part part : {Part::Real, Part::Complex}) {
    ordered_json list = ordered_json::array();
    for (const auto& d : rep.diagonals)
      if (d.part == part) list.push_back(diagonal_json(d));
    diags[koszul::part_name(part)] = list;
  }
  j["diagonals"] = diags;

  ordered_json ko = ordered_json::array();
  for (const auto& d : rep.diagonals) {
    if (d.part != Part::Real) continue;
    if (auto g = d.determined()) {
      ko.push_back(g->to_string());
    } else {
      ko.push_back(nullptr);
    }
  }
  j["ko"] = ko;

  if (!rep.ku) {
    j["ku"] = nullptr;
    j["psi"] = nullptr;
    j["mu"] = nullptr;
    j["core"] = nullptr;
    j["complex_note"] = rep.complex_note;
  } else {
    ordered_json ku = ordered_json::array(), psi = ordered_json::array(), mu = ordered_json::array();
    for (int q = 0; q < 8; ++q) {
      ku.push_back(rep.ku->ku[q].to_string());
      ordered_json pj;
      auto s = scalar_of(rep.ku->psi[q]);
      if (s) {
        pj["scalar"] = *s;
      } else {
        pj["scalar"] = nullptr;
      }
      pj["matrix"] = matrix_json(rep.ku->psi[q].canonical_matrix());
      psi.push_back(pj);
      mu.push_back(rep.mu[q].to_string());
    }
    j["ku"] = ku;
    j["psi"] = psi;
    j["mu"] = mu;

    ordered_json core;
    ordered_json cons;
    ordered_json mo = ordered_json::object();
    for (const auto& [q, r] : rep.constraints.mo_rank)
      mo[std::to_string(q)] = {{"rank", r}, {"source", rep.constraint_source.at(q)}};
    cons["mo"] = mo;
    ordered_json arrows = ordered_json::array();
    for (const auto& a : rep.constraints.arrows) arrows.push_back(arrow_text(a));
    cons["arrows"] = arrows;
    core["constraints"] = cons;
    ordered_json sols = ordered_json::array();
    for (const auto& s : rep.core) {
      ordered_json sj;
      ordered_json groups = ordered_json::array();
      for (unsigned r : s.mo) {
        std::vector<Integer> twos(r, Integer(2));
        groups.push_back(FgAbGroup::from_invariants(twos, 0).to_string());
      }
      sj["mo"] = groups;
      sj["mo_rank"] = s.mo;
      sj["eta_rank"] = s.eta;
      sj["c_rank"] = s.c;
      sj["r_rank"] = s.r;
      sols.push_back(sj);
    }
    core["solutions"] = sols;
    j["core"] = core;
  }

  if (config.emit_intermediate) {
    ordered_json inter;
    ordered_json snf = ordered_json::array();
    for (std::size_t c = 0; c < spec.k; ++c) {
      const IntMatrix b = kgraph::reordered_boundary(spec, rep.part, c);
      ordered_json diag = ordered_json::array();
      for (const auto& d : exactalg::smith_normal_form(b).diagonal()) diag.push_back(int_json(d));
      snf.push_back({{"color", c + 1}, {"boundary", matrix_json(b)}, {"snf", diag}});
    }
    inter["colors"] = snf;
    ordered_json cxs;
    for (Part part : {Part::Real, Part::Complex}) {
      ordered_json list = ordered_json::array();
      for (int q = 0; q < spectral::period(part); ++q) {
        const auto& cx = part == Part::Real ? rep.page.real_complexes[q] : rep.page.complex_complexes[q];
        ordered_json cj = complex_json(cx);
        cj["degree"] = q;
        list.push_back(cj);
      }
      cxs[koszul::part_name(part)] = list;
    }
    inter["complexes"] = cxs;
    j["intermediate"] = inter;
  }

  if (config.emit_lifts) {
    ordered_json lifts;
    for (Part part : {Part::Real, Part::Complex}) {
      ordered_json list = ordered_json::array();
      for (int q = 0; q < spectral::period(part); ++q) {
        const auto& row = part == Part::Real ? rep.page.real[q] : rep.page.complex[q];
        for (std::size_t p = 0; p < row.size(); ++p) {
          if (row[p].group.is_trivial()) continue;
          ordered_json gens = ordered_json::array();
          for (std::size_t g = 0; g < row[p].group.canonical_rank(); ++g) {
            ordered_json v = ordered_json::array();
            for (const auto& x : row[p].lift_generator(g)) v.push_back(int_json(x));
            gens.push_back(v);
          }
          list.push_back({{"cell", {p, q}}, {"group", row[p].group.to_string()}, {"generators", gens}});
        }
      }
      lifts[koszul::part_name(part)] = list;
    }
    j["lifts"] = lifts;
  }
  return j;
}

// ---- text

void grid(std::ostream& out, const Report& rep, Part part) {
  const int k = static_cast<int>(rep.input.spec.k);
  const int m = spectral::period(part);
  std::vector<std::vector<std::string>> cells(m, std::vector<std::string>(k + 1));
  std::size_t width = 1;
  for (int q = 0; q < m; ++q)
    for (int p = 0; p <= k; ++p) {
      cells[q][p] = rep.page.cell(part, p, q).to_string();
      width = std::max(width, cells[q][p].size());
    }
  out << "E2 " << koszul::part_name(part) << " part (rows q, columns p)\n";
  out << "  q\\p";
  for (int p = 0; p <= k; ++p) out << " | " << std::setw(static_cast<int>(width)) << p;
  out << "\n";
  for (int q = m - 1; q >= 0; --q) {
    out << "  " << std::setw(3) << q;
    for (int p = 0; p <= k; ++p) out << " | " << std::setw(static_cast<int>(width)) << cells[q][p];
    out << "\n";
  }
  out << "\n";
}

void render_text(std::ostream& out, const Report& rep, const JobConfig& config) {
  const auto& spec = rep.input.spec;
  out << "k-graph: k = " << spec.k << ", " << spec.vertices.size() << " vertices\n";
  out << "validation: ok\n";
  out << "involution: fixed {";
  for (std::size_t i = 0; i < rep.part.g_f.size(); ++i) out << (i ? ", " : "") << spec.vertices[rep.part.g_f[i]];
  out << "}, swapped {";
  for (std::size_t i = 0; i < rep.part.g_1.size(); ++i)
    out << (i ? ", " : "") << "(" << spec.vertices[rep.part.g_1[i]] << " " << spec.vertices[rep.part.g_2[i]] << ")";
  out << "}\n";
  out << "note: " << kInvolutionCaveat << "\n\n";

  if (config.emit_intermediate) {
    for (std::size_t c = 0; c < spec.k; ++c) {
      const IntMatrix b = kgraph::reordered_boundary(spec, rep.part, c);
      out << "B_" << c + 1 << " = I - M^t (reordered):\n" << b.to_string() << "\n";
      out << "SNF diagonal:";
      for (const auto& d : exactalg::smith_normal_form(b).diagonal()) out << " " << d.get_str();
      out << "\n\n";
    }
    for (Part part : {Part::Real, Part::Complex}) {
      for (int q = 0; q < spectral::period(part); ++q) {
        const auto& cx = part == Part::Real ? rep.page.real_complexes[q] : rep.page.complex_complexes[q];
        out << koszul::part_name(part) << " complex, degree " << q << ":";
        for (const auto& g : cx.groups) out << " [" << g.to_string() << "]";
        out << "\n";
        for (std::size_t p = 1; p <= cx.k; ++p) {
          const IntMatrix& d = cx.boundary(p).matrix();
          if (d.rows() == 0 || d.cols() == 0) continue;
          out << "  d_" << p << ":\n" << d.to_string() << "\n";
        }
      }
    }
    out << "\n";
  }

  grid(out, rep, Part::Real);
  grid(out, rep, Part::Complex);

  out << "differentials that may be nonzero:";
  if (rep.diffs.empty()) out << " none";
  out << "\n";
  for (const auto& e : rep.diffs.entries) {
    out << "  d" << e.r << " " << koszul::part_name(e.part) << " (" << e.source.p << "," << e.source.q << ") -> ("
        << e.target.p << "," << e.target.q << ")\n";
  }
  out << "\n";

  for (Part part : {Part::Real, Part::Complex}) {
    out << (part == Part::Real ? "KO" : "KU") << " by diagonal\n";
    for (const auto& d : rep.diagonals) {
      if (d.part != part) continue;
      out << "  " << (part == Part::Real ? "KO_" : "KU_") << d.degree << ": " << spectral::status_name(d.status);
      if (auto g = d.determined()) {
        out << ", " << g->to_string() << "\n";
        continue;
      }
      out << "\n";
      for (const auto& v : d.variants) {
        out << "    " << v.label << ": factors " << group_list(v.factors, ", ");
        if (v.complete) {
          out << "; candidates " << group_list(v.candidates, " | ");
        } else {
          out << "; incomplete (" << v.note << ")";
        }
        out << "\n";
      }
    }
    out << "\n";
  }

  if (!rep.ku) {
    out << "KU and psi not computed: " << rep.complex_note << "\n";
    return;
  }
  out << "KU, psi and MU\n";
  for (int q = 0; q < 8; ++q) {
    out << "  " << q << ": KU = " << rep.ku->ku[q].to_string() << ", psi = ";
    if (auto s = scalar_of(rep.ku->psi[q])) {
      out << (*s > 0 ? "+1" : "-1");
    } else {
      out << rep.ku->psi[q].canonical_matrix().to_string();
    }
    out << ", MU = " << rep.mu[q].to_string() << "\n";
  }
  out << "\n";

  out << "core constraints:";
  if (rep.constraints.mo_rank.empty() && rep.constraints.arrows.empty()) out << " none";
  out << "\n";
  for (const auto& [q, r] : rep.constraints.mo_rank)
    out << "  rank MO_" << q << " = " << r << " (" << rep.constraint_source.at(q) << ")\n";
  for (const auto& a : rep.constraints.arrows) out << "  " << arrow_text(a) << "\n";
  out << "core MO solutions (" << rep.core.size() << ")\n";
  out << "  i:";
  for (int i = 0; i < 8; ++i) out << " " << std::setw(5) << i;
  out << "\n";
  for (const auto& s : rep.core) {
    out << "   ";
    for (unsigned r : s.mo) out << " " << std::setw(5) << (r == 0 ? "0" : r == 1 ? "Z_2" : "Z_2^" + std::to_string(r));
    out << "\n";
  }
}

}  // namespace

int run(const JobConfig& config, std::ostream& out, std::ostream& err) {
  try {
    std::ifstream in(config.input_path);
    if (!in) throw ParseError("cannot open " + config.input_path);
    std::stringstream buf;
    buf << in.rdbuf();
    if (sgn(config.ext_bound) <= 0 || config.core_bound == 0) throw ParseError("bounds must be positive");
    const Report rep = compute(parse_input(buf.str()), config);
    if (config.format == Format::Json) {
      out << to_json(rep, config).dump(2) << "\n";
    } else {
      render_text(out, rep, config);
    }
    return 0;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return exit_code(e.kind());
  }
}

}  // namespace kkth::cli
