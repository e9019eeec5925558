#include <json.hpp>

#include "kkth/cli.hpp"

namespace kkth::cli {

using nlohmann::json;
using exactalg::FgAbGroup;
using exactalg::Integer;
using exactalg::IntMatrix;

namespace {

std::string position(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

class Reader {
 public:
  explicit Reader(const std::string& text) : text_(text) {}

  [[noreturn]] void fail(const std::string& key, const std::string& what) const {
    const auto at = text_.find("\"" + key + "\"");
    throw ParseError(position(text_, at == std::string::npos ? 0 : at) + ": " + what);
  }

  void only_keys(const json& obj, const std::string& where, std::initializer_list<const char*> keys) const {
    if (!obj.is_object()) fail(where, where + " must be an object");
    for (const auto& [key, _] : obj.items()) {
      bool known = false;
      for (const char* k : keys) known = known || key == k;
      if (!known) fail(key, "unknown key \"" + key + "\" in " + where);
    }
  }

  const json& require(const json& obj, const std::string& key) const {
    if (!obj.contains(key)) throw ParseError(position(text_, 0) + ": missing key \"" + key + "\"");
    return obj.at(key);
  }

  long long integer(const json& v, const std::string& key) const {
    if (!v.is_number_integer()) fail(key, "\"" + key + "\" expects integers");
    if (v.is_number_unsigned() && v.get<unsigned long long>() > static_cast<unsigned long long>(LLONG_MAX))
      fail(key, "\"" + key + "\" entry out of range");
    return v.get<long long>();
  }

  std::size_t natural(const json& v, const std::string& key) const {
    const long long x = integer(v, key);
    if (x < 0) fail(key, "\"" + key + "\" expects nonnegative integers");
    return static_cast<std::size_t>(x);
  }

  const json& array(const json& v, const std::string& key) const {
    if (!v.is_array()) fail(key, "\"" + key + "\" expects an array");
    return v;
  }

 private:
  const std::string& text_;
};

spectral::CoreConstraints read_constraints(const Reader& rd, const json& block) {
  rd.only_keys(block, "core_constraints", {"mo", "arrows"});
  spectral::CoreConstraints out;
  if (block.contains("mo")) {
    const json& mo = block.at("mo");
    if (!mo.is_object()) rd.fail("mo", "\"mo\" expects an object of degree: rank");
    for (const auto& [deg, rank] : mo.items()) {
      int q = 0;
      try {
        std::size_t used = 0;
        q = std::stoi(deg, &used);
        if (used != deg.size()) throw std::invalid_argument(deg);
      } catch (const std::exception&) {
        rd.fail(deg, "degree \"" + deg + "\" is not an integer");
      }
      out.mo_rank[spectral::wrap(q, 8)] = static_cast<unsigned>(rd.natural(rank, "mo"));
    }
  }
  if (block.contains("arrows")) {
    for (const json& a : rd.array(block.at("arrows"), "arrows")) {
      rd.only_keys(a, "arrows", {"arrow", "index", "property"});
      spectral::ArrowConstraint c;
      const json& name = rd.require(a, "arrow");
      const json& prop = rd.require(a, "property");
      if (name == "eta") {
        c.arrow = spectral::Arrow::Eta;
      } else if (name == "c") {
        c.arrow = spectral::Arrow::C;
      } else if (name == "r") {
        c.arrow = spectral::Arrow::R;
      } else {
        rd.fail("arrow", "arrow must be one of eta, c, r");
      }
      if (prop == "zero") {
        c.property = spectral::ArrowProperty::Zero;
      } else if (prop == "injective") {
        c.property = spectral::ArrowProperty::Injective;
      } else if (prop == "surjective") {
        c.property = spectral::ArrowProperty::Surjective;
      } else {
        rd.fail("property", "property must be one of zero, injective, surjective");
      }
      c.index = spectral::wrap(static_cast<int>(rd.integer(rd.require(a, "index"), "index")), 8);
      out.arrows.push_back(c);
    }
  }
  return out;
}

}  // namespace

JobInput parse_input(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
    std::string what = e.what();
    const auto cut = what.find("syntax error");
    throw ParseError(position(text, byte) + ": " + (cut == std::string::npos ? what : what.substr(cut)));
  }
  Reader rd(text);
  rd.only_keys(doc, "input", {"k", "vertices", "involution", "matrices", "convention", "core_constraints"});

  JobInput in;
  in.spec.k = rd.natural(rd.require(doc, "k"), "k");
  for (const json& v : rd.array(rd.require(doc, "vertices"), "vertices")) {
    if (!v.is_string()) rd.fail("vertices", "vertex names must be strings");
    in.spec.vertices.push_back(v.get<std::string>());
  }
  for (const json& v : rd.array(rd.require(doc, "involution"), "involution"))
    in.spec.involution.push_back(rd.natural(v, "involution"));
  for (const json& m : rd.array(rd.require(doc, "matrices"), "matrices")) {
    std::vector<std::vector<Integer>> rows;
    std::size_t cols = 0;
    for (const json& r : rd.array(m, "matrices")) {
      std::vector<Integer> row;
      for (const json& x : rd.array(r, "matrices")) row.emplace_back(static_cast<long>(rd.integer(x, "matrices")));
      if (!rows.empty() && row.size() != cols) rd.fail("matrices", "ragged matrix rows");
      cols = row.size();
      rows.push_back(std::move(row));
    }
    IntMatrix mat(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < cols; ++j) mat(i, j) = rows[i][j];
    in.spec.matrices.push_back(std::move(mat));
  }
  if (doc.contains("convention") && !doc.at("convention").is_string()) {
    rd.fail("convention", "\"convention\" must be a string");
  }
  if (doc.contains("core_constraints")) in.constraints = read_constraints(rd, doc.at("core_constraints"));
  return in;
}

FgAbGroup parse_group(const std::string& text) {
  if (text == "0") return FgAbGroup();
  std::vector<Integer> torsion;
  std::size_t free = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(" + ", start);
    const std::string part = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    if (part == "Z") {
      ++free;
    } else if (part.size() > 2 && part.compare(0, 2, "Z_") == 0 &&
               part.find_first_not_of("0123456789", 2) == std::string::npos) {
      torsion.emplace_back(part.substr(2));
    } else {
      throw ParseError("not a group: \"" + text + "\"");
    }
    if (end == std::string::npos) break;
    start = end + 3;
  }
  return FgAbGroup::from_invariants(torsion, free);
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Validation: return 2;
    case ErrorKind::Computation: return 3;
    case ErrorKind::Bound: return 4;
  }
  return 3;
}

}  // namespace kkth::cli
