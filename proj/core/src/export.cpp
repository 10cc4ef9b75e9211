#include "mcgrep/export.hpp"

#include <json.hpp>

namespace mcgrep {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json poly_record(const LaurentPoly& p) {
  ordered_json terms = ordered_json::array();
  for (const auto& m : p.terms()) {
    ordered_json term;
    term["coeff"] = m.coeff.str();
    term["q"] = {m.q.numerator(), m.q.denominator()};
    term["t"] = {m.t.numerator(), m.t.denominator()};
    terms.push_back(std::move(term));
  }
  return terms;
}

ordered_json matrix_record(const RingMatrix& m) {
  ordered_json rec;
  rec["dim"] = m.dim();
  ordered_json entries = ordered_json::array();
  for (std::size_t i = 0; i < m.dim(); ++i) {
    for (std::size_t j = 0; j < m.dim(); ++j) {
      if (m(i, j).is_zero()) continue;
      ordered_json e;
      e["row"] = i + 1;
      e["col"] = j + 1;
      e["poly"] = poly_record(m(i, j));
      entries.push_back(std::move(e));
    }
  }
  rec["entries"] = std::move(entries);
  return rec;
}

Exponent exponent_from(const nlohmann::json& pair) {
  return Exponent(pair.at(0).get<std::int64_t>(), pair.at(1).get<std::int64_t>());
}

}  // namespace

std::string export_matrix(const RingMatrix& m) { return matrix_record(m).dump() + "\n"; }

RingMatrix import_matrix(std::string_view json_text) {
  const auto rec = nlohmann::json::parse(json_text);
  RingMatrix m(rec.at("dim").get<std::size_t>());
  for (const auto& e : rec.at("entries")) {
    const auto row = e.at("row").get<std::size_t>();
    const auto col = e.at("col").get<std::size_t>();
    if (row < 1 || col < 1 || row > m.dim() || col > m.dim()) {
      throw std::out_of_range("matrix record index out of range");
    }
    std::vector<Monomial> terms;
    for (const auto& t : e.at("poly")) {
      terms.push_back(Monomial{Integer(t.at("coeff").get<std::string>()),
                               exponent_from(t.at("q")), exponent_from(t.at("t"))});
    }
    m.at(row - 1, col - 1) = LaurentPoly::from_terms(std::move(terms));
  }
  return m;
}

std::string export_block_structure(const BlockStructure& s) {
  ordered_json rec;
  rec["block_dim"] = s.block_dim;
  ordered_json perm = ordered_json::array();
  for (auto p : s.block_perm) perm.push_back(p + 1);
  rec["block_perm"] = std::move(perm);
  ordered_json blocks = ordered_json::object();
  for (std::size_t j = 0; j < s.blocks.size(); ++j) {
    blocks[std::to_string(s.block_perm[j] + 1) + "," + std::to_string(j + 1)] =
        matrix_record(s.blocks[j]);
  }
  rec["blocks"] = std::move(blocks);
  return rec.dump() + "\n";
}

std::string export_integer_matrix(const IntMatrix& m) {
  ordered_json rec;
  rec["dim"] = m.size();
  rec["rows"] = m;
  return rec.dump() + "\n";
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace mcgrep
