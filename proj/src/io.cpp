#include "convertbw/io.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>

namespace convertbw {

namespace {

using nlohmann::json;

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw IoError(path.string() + ": " + e.what());
  }
  return doc;
}

void write_json(const std::filesystem::path& path, const json& doc) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  out << doc.dump(1) << '\n';
}

std::vector<std::vector<std::int64_t>> int_rows(const json& arr, const std::string& what) {
  if (!arr.is_array()) throw IoError(what + " must be a 2-D integer array");
  std::vector<std::vector<std::int64_t>> rows;
  for (const json& row : arr) {
    if (!row.is_array()) throw IoError(what + " must be a 2-D integer array");
    std::vector<std::int64_t> r;
    for (const json& v : row) {
      if (!v.is_number_integer()) throw IoError(what + " has a non-integer entry");
      r.push_back(v.get<std::int64_t>());
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

std::size_t get_count(const json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer()) {
    throw IoError(std::string("missing integer field \"") + key + "\"");
  }
  std::int64_t v = doc[key].get<std::int64_t>();
  if (v < 0) throw IoError(std::string("field \"") + key + "\" must be nonnegative");
  return static_cast<std::size_t>(v);
}

json matrix_to_json(const FFMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) {
      row.push_back(m.at(i, j).value);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

FFMatrix matrix_from_rows(const PrimeField& field,
                          const std::vector<std::vector<std::int64_t>>& rows,
                          std::size_t want_rows, std::size_t want_cols,
                          const std::string& what) {
  if (rows.size() != want_rows || (want_rows > 0 && rows.front().size() != want_cols)) {
    throw IoError(what + " must be " + std::to_string(want_rows) + "x" +
                  std::to_string(want_cols));
  }
  FFMatrix m = FFMatrix::from_signed(field, rows);
  if (m.cols() != want_cols) {
    throw IoError(what + " must be " + std::to_string(want_rows) + "x" +
                  std::to_string(want_cols));
  }
  return m;
}

/// FNV-1a over decimal renderings of a stream of integers; formatting and
/// whitespace of the files do not affect it.
class IntChecksum {
 public:
  void feed(std::int64_t v) {
    std::string s = std::to_string(v) + ',';
    for (char ch : s) {
      h_ ^= static_cast<unsigned char>(ch);
      h_ *= 0x100000001b3ull;
    }
  }
  void feed_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    for (const auto& row : rows) {
      for (std::int64_t v : row) feed(v);
    }
  }
  std::uint64_t value() const { return h_; }

 private:
  std::uint64_t h_ = 0xcbf29ce484222325ull;
};

}  // namespace

ConvertiblePair load_code_file(const std::filesystem::path& path) {
  json doc = read_json(path);
  std::size_t lambda = get_count(doc, "lambda");
  std::size_t kF = get_count(doc, "kF");
  std::size_t rF = get_count(doc, "rF");
  std::size_t rI = get_count(doc, "rI");
  std::size_t ell = get_count(doc, "ell");
  std::uint64_t p = get_count(doc, "p");
  CodeParams params = validate_params(lambda, kF, rF, rI, ell, p);
  PrimeField field(p);
  if (!doc.contains("B") || !doc.contains("C")) throw IoError("missing B or C");
  FFMatrix b = matrix_from_rows(field, int_rows(doc["B"], "B"), params.kI() * ell,
                                params.rI * ell, "B");
  FFMatrix c = matrix_from_rows(field, int_rows(doc["C"], "C"), params.kF * ell,
                                params.rF * ell, "C");
  return ConvertiblePair(params, std::move(b), std::move(c));
}

void save_code_file(const std::filesystem::path& path, const ConvertiblePair& pair) {
  json doc;
  doc["p"] = pair.params.p;
  doc["ell"] = pair.params.ell;
  doc["lambda"] = pair.params.lambda;
  doc["kF"] = pair.params.kF;
  doc["rF"] = pair.params.rF;
  doc["rI"] = pair.params.rI;
  doc["B"] = matrix_to_json(pair.B);
  doc["C"] = matrix_to_json(pair.C);
  write_json(path, doc);
}

ReadPlan load_plan_file(const std::filesystem::path& path, const CodeParams& params) {
  json doc = read_json(path);
  if (!doc.contains("D") || !doc["D"].is_array()) {
    throw IoError("plan file must contain a \"D\" array");
  }
  std::vector<std::vector<std::size_t>> d;
  for (const json& set : doc["D"]) {
    if (!set.is_array()) throw IoError("each read set must be an array");
    std::vector<std::size_t> s;
    for (const json& v : set) {
      if (!v.is_number_integer() || v.get<std::int64_t>() < 0) {
        throw IoError("subsymbol indices must be nonnegative integers");
      }
      s.push_back(v.get<std::size_t>());
    }
    d.push_back(std::move(s));
  }
  return ReadPlan::checked(std::move(d), params);
}

void save_plan_file(const std::filesystem::path& path, const ReadPlan& plan) {
  json sets = json::array();
  for (const auto& set : plan.D) sets.push_back(set);
  write_json(path, json{{"D", sets}});
}

FFMatrix load_matrix_file(const std::filesystem::path& path) {
  json doc = read_json(path);
  std::uint64_t p = get_count(doc, "p");
  PrimeField field(p);
  if (!doc.contains("entries")) throw IoError("missing \"entries\"");
  auto rows = int_rows(doc["entries"], "entries");
  return FFMatrix::from_signed(field, rows);
}

void save_matrix_file(const std::filesystem::path& path, const FFMatrix& m) {
  json doc;
  doc["p"] = m.field().modulus();
  doc["entries"] = matrix_to_json(m);
  write_json(path, doc);
}

ExampleFixture load_example_fixture(const std::filesystem::path& dir) {
  json code = read_json(dir / "code.json");
  json plan = read_json(dir / "plan.json");
  json mat = read_json(dir / "matrix_e.json");

  IntChecksum sum;
  for (const char* key : {"p", "ell", "lambda", "kF", "rF", "rI"}) {
    sum.feed(code[key].get<std::int64_t>());
  }
  auto b_rows = int_rows(code["B"], "B");
  auto c_rows = int_rows(code["C"], "C");
  sum.feed_rows(b_rows);
  sum.feed_rows(c_rows);
  const json& d = plan["D"];
  sum.feed(static_cast<std::int64_t>(d.size()));
  for (const json& set : d) {
    sum.feed(static_cast<std::int64_t>(set.size()));
    for (const json& v : set) sum.feed(v.get<std::int64_t>());
  }
  auto e_rows = int_rows(mat["entries"], "entries");
  sum.feed(static_cast<std::int64_t>(e_rows.size()));
  sum.feed(e_rows.empty() ? 0 : static_cast<std::int64_t>(e_rows.front().size()));
  sum.feed_rows(e_rows);

  ConvertiblePair pair = load_code_file(dir / "code.json");
  ReadPlan rp = load_plan_file(dir / "plan.json", pair.params);
  FFMatrix witness = load_matrix_file(dir / "matrix_e.json");
  return ExampleFixture{std::move(pair), std::move(rp), std::move(witness), sum.value()};
}

std::map<std::string, std::vector<std::size_t>> parse_grid_spec(const std::string& spec) {
  std::map<std::string, std::vector<std::size_t>> axes;
  std::string current_key;
  std::size_t pos = 0;
  auto parse_value = [&axes](const std::string& key, const std::string& tok) {
    if (key.empty()) throw BadGridSpec("value before any key in grid spec");
    auto dots = tok.find("..");
    auto to_count = [&tok](const std::string& s) {
      if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
        throw BadGridSpec("bad number \"" + s + "\" in grid spec");
      }
      return static_cast<std::size_t>(std::stoull(s));
    };
    if (dots == std::string::npos) {
      axes[key].push_back(to_count(tok));
    } else {
      std::size_t lo = to_count(tok.substr(0, dots));
      std::size_t hi = to_count(tok.substr(dots + 2));
      if (lo > hi) throw BadGridSpec("empty range \"" + tok + "\"");
      for (std::size_t v = lo; v <= hi; ++v) axes[key].push_back(v);
    }
  };
  while (pos <= spec.size()) {
    std::size_t comma = spec.find(',', pos);
    std::string token = spec.substr(pos, comma == std::string::npos ? std::string::npos
                                                                    : comma - pos);
    if (!token.empty()) {
      auto eq = token.find('=');
      if (eq != std::string::npos) {
        current_key = token.substr(0, eq);
        parse_value(current_key, token.substr(eq + 1));
      } else {
        parse_value(current_key, token);
      }
    }
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (axes.empty()) throw BadGridSpec("empty grid spec");
  return axes;
}

std::vector<CodeParams> expand_grid(
    const std::map<std::string, std::vector<std::size_t>>& axes, std::uint64_t p) {
  static const std::vector<std::string> keys = {"lambda", "kF", "rF", "rI", "ell"};
  for (const auto& [key, values] : axes) {
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      throw BadGridSpec("unknown grid axis \"" + key + "\"");
    }
    if (values.empty()) throw BadGridSpec("axis \"" + key + "\" has no values");
  }
  auto axis = [&axes](const std::string& key) {
    auto it = axes.find(key);
    if (it == axes.end()) throw BadGridSpec("missing grid axis \"" + key + "\"");
    return it->second;
  };
  std::vector<CodeParams> out;
  for (std::size_t lam : axis("lambda"))
    for (std::size_t kF : axis("kF"))
      for (std::size_t rF : axis("rF"))
        for (std::size_t rI : axis("rI"))
          for (std::size_t ell : axis("ell")) {
            try {
              out.push_back(validate_params(lam, kF, rF, rI, ell, p));
            } catch (const BadParams&) {
              // invalid tuples are skipped, not fatal
            }
          }
  return out;
}

}  // namespace convertbw
