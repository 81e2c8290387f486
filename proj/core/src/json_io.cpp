#include "tnngrass/json_io.hpp"

#include <json.hpp>

#include <set>
#include <vector>

namespace tnn::io {

namespace {

using json = nlohmann::ordered_json;

std::string line_column(const std::string& input, std::size_t position) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < position && i < input.size(); ++i) {
    if (input[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

/// DOM builder that rejects duplicate object keys and reports paths.
class StrictSax : public nlohmann::json_sax<json> {
 public:
  explicit StrictSax(const std::string& input) : input_(input) {}

  json take_root() { return std::move(root_); }

  std::string path() const {
    std::string p = "$";
    for (const Level& level : levels_) {
      if (level.container.is_object()) {
        if (level.key_set) p += "." + level.key;
      } else {
        p += "[" + std::to_string(level.container.size()) + "]";
      }
    }
    return p;
  }

  bool null() override { return attach(nullptr); }
  bool boolean(bool v) override { return attach(v); }
  bool number_integer(number_integer_t v) override { return attach(v); }
  bool number_unsigned(number_unsigned_t v) override { return attach(v); }
  bool number_float(number_float_t v, const string_t&) override { return attach(v); }
  bool string(string_t& v) override { return attach(v); }
  bool binary(binary_t& v) override { return attach(v); }

  bool start_object(std::size_t) override {
    levels_.push_back({json::object(), {}, "", false});
    return true;
  }
  bool key(string_t& v) override {
    Level& top = levels_.back();
    if (!top.keys.insert(v).second)
      throw ParseError("field " + path() + ": duplicate key \"" + v + "\"");
    top.key = v;
    top.key_set = true;
    return true;
  }
  bool end_object() override { return pop(); }
  bool start_array(std::size_t) override {
    levels_.push_back({json::array(), {}, "", false});
    return true;
  }
  bool end_array() override { return pop(); }

  bool parse_error(std::size_t position, const std::string&,
                   const nlohmann::detail::exception& ex) override {
    std::string what = ex.what();
    // strip nlohmann's "[json.exception...] " prefix
    if (auto cut = what.find("] "); cut != std::string::npos) what = what.substr(cut + 2);
    throw ParseError(line_column(input_, position) + ": " + what);
  }

 private:
  struct Level {
    json container;
    std::set<std::string> keys;
    std::string key;
    bool key_set = false;
  };

  bool attach(json v) {
    if (levels_.empty()) {
      root_ = std::move(v);
      return true;
    }
    Level& top = levels_.back();
    if (top.container.is_object()) {
      top.container[top.key] = std::move(v);
      top.key_set = false;
    } else {
      top.container.push_back(std::move(v));
    }
    return true;
  }

  bool pop() {
    json done = std::move(levels_.back().container);
    levels_.pop_back();
    return attach(std::move(done));
  }

  const std::string& input_;
  std::vector<Level> levels_;
  json root_;
};

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ParseError("field " + path + ": " + message);
}

int expect_int(const json& v, const std::string& path) {
  if (!v.is_number_integer() && !v.is_number_unsigned()) fail(path, "expected an integer");
  return v.get<int>();
}

IndexSet expect_index_array(const json& v, const std::string& path) {
  if (!v.is_array()) fail(path, "expected an array of indices");
  std::vector<int> elems;
  for (std::size_t i = 0; i < v.size(); ++i)
    elems.push_back(expect_int(v[i], path + "[" + std::to_string(i) + "]"));
  try {
    return IndexSet(std::move(elems));
  } catch (const std::invalid_argument& ex) {
    fail(path, ex.what());
  }
}

void reject_unknown_keys(const json& obj, const std::set<std::string>& allowed,
                         const std::string& path) {
  for (const auto& [k, v] : obj.items())
    if (!allowed.count(k)) fail(path, "unknown key \"" + k + "\"");
}

}  // namespace

QuadExpression parse_input(const std::string& bytes) {
  StrictSax sax(bytes);
  json::sax_parse(bytes, &sax);
  json doc = sax.take_root();

  if (!doc.is_object()) fail("$", "expected a top-level object");
  reject_unknown_keys(doc, {"m", "n", "terms"}, "$");
  for (const char* req : {"m", "n", "terms"})
    if (!doc.contains(req)) fail("$", std::string("missing key \"") + req + "\"");

  const int m = expect_int(doc["m"], "$.m");
  const int n = expect_int(doc["n"], "$.n");
  GrassmannContext ctx;
  try {
    ctx = GrassmannContext(m, n);
  } catch (const std::invalid_argument& ex) {
    fail("$.m", ex.what());
  }

  const json& jterms = doc["terms"];
  if (!jterms.is_array()) fail("$.terms", "expected an array");
  std::vector<QuadTerm> terms;
  for (std::size_t a = 0; a < jterms.size(); ++a) {
    const std::string path = "$.terms[" + std::to_string(a) + "]";
    const json& jt = jterms[a];
    if (!jt.is_object()) fail(path, "expected an object");
    reject_unknown_keys(jt, {"c", "I", "J"}, path);
    for (const char* req : {"c", "I", "J"})
      if (!jt.contains(req)) fail(path, std::string("missing key \"") + req + "\"");
    if (!jt["c"].is_string()) fail(path + ".c", "expected a rational string like \"-1/3\"");
    QuadTerm term;
    try {
      term.coeff = rat::parse(jt["c"].get<std::string>());
    } catch (const std::invalid_argument& ex) {
      fail(path + ".c", ex.what());
    }
    term.I = expect_index_array(jt["I"], path + ".I");
    term.J = expect_index_array(jt["J"], path + ".J");
    terms.push_back(std::move(term));
  }

  try {
    return QuadExpression(ctx, std::move(terms));
  } catch (const std::invalid_argument& ex) {
    fail("$.terms", ex.what());
  }
}

namespace {

json matching_to_json(const Matching& m) {
  json out = json::array();
  for (const auto& [u, v] : m.pairs()) out.push_back(json::array({u, v}));
  return out;
}

}  // namespace

std::string format_document(const QuadExpression& e) {
  json doc;
  doc["m"] = e.context().m;
  doc["n"] = e.context().n;
  doc["terms"] = json::array();
  for (const QuadTerm& t : e.terms()) {
    json jt;
    jt["c"] = rat::to_string(t.coeff);
    jt["I"] = t.I.elements();
    jt["J"] = t.J.elements();
    doc["terms"].push_back(std::move(jt));
  }
  return doc.dump();
}

std::string format_report(const Verdict& v, int eta, const ReportMeta& meta) {
  json out;
  out["verdict"] = v.valid() ? "valid" : "invalid";
  out["eta"] = eta;
  json rows = json::array();
  for (const CertificateRow& row : v.certificate) {
    json jr;
    jr["matching"] = matching_to_json(row.matching);
    jr["sum"] = rat::to_string(row.sum);
    rows.push_back(std::move(jr));
  }
  out["certificate"] = std::move(rows);
  if (v.violating_row) {
    const CertificateRow& row = v.certificate[*v.violating_row];
    out["violating_matching"] = matching_to_json(row.matching);
    out["sum"] = rat::to_string(row.sum);
  }
  if (v.counterexample) {
    const FalsifyResult& ce = *v.counterexample;
    json jc;
    json mtx = json::array();
    for (int r = 1; r <= ce.point.matrix.rows(); ++r) {
      json jrow = json::array();
      for (int c = 1; c <= ce.point.matrix.cols(); ++c)
        jrow.push_back(rat::to_string(ce.point.matrix.at(r, c)));
      mtx.push_back(std::move(jrow));
    }
    jc["matrix"] = std::move(mtx);
    jc["value"] = rat::to_string(ce.value);
    jc["trial"] = ce.trial;
    out["counterexample"] = std::move(jc);
  }
  if (meta.method) out["method"] = *meta.method;
  if (meta.samples) out["samples"] = *meta.samples;
  if (meta.seed) out["seed"] = *meta.seed;
  if (meta.time_ms) out["time_ms"] = *meta.time_ms;
  return out.dump();
}

}  // namespace tnn::io
