#include "core/query.hpp"

#include <variant>

#include "core/error.hpp"

namespace cohomlen {

namespace {

using Space = std::variant<RepSphere, CohomSphereData>;

constexpr std::string_view anr_assumption = "source is a G-ANR (asserted by caller, not checked)";

json provenance_entry(std::string claim, std::string basis, std::vector<std::string> assumptions = {}) {
  return {{"claim", std::move(claim)}, {"basis", std::move(basis)}, {"assumptions", std::move(assumptions)}};
}

class QueryRun {
 public:
  explicit QueryRun(json document) : doc_(std::move(document)) {
    if (!doc_.is_object()) fail(ErrorKind::usage, "document must be a JSON object");
    if (doc_.contains("schema") && doc_.at("schema") != schema_version) {
      fail(ErrorKind::usage, "unsupported schema version " + doc_.at("schema").dump());
    }
    if (!doc_.contains("query") || !doc_.at("query").is_string()) {
      fail(ErrorKind::usage, "no query given (document field 'query' or command-line query)");
    }
    query_ = doc_.at("query").get<std::string>();
    params_ = doc_.value("parameters", json::object());
    if (!params_.is_object()) fail(ErrorKind::usage, "'parameters' must be an object");
    spaces_ = doc_.value("spaces", json::object());
    if (!spaces_.is_object()) fail(ErrorKind::usage, "'spaces' must be an object");
    if (doc_.contains("group")) group_ = group_from_json(doc_.at("group"));
  }

  Report execute() {
    json result;
    if (query_ == "length") {
      result = length();
    } else if (query_ == "euler") {
      result = euler();
    } else if (query_ == "validate") {
      result = validate_source();
    } else if (query_ == "borsuk-ulam") {
      result = borsuk_ulam();
    } else if (query_ == "map-exists") {
      result = map_exists();
    } else if (query_ == "canonical-target") {
      result = canonical();
    } else if (query_ == "bourgin-yang") {
      result = bourgin_yang();
    } else if (query_ == "bounds") {
      result = bounds();
    } else if (query_ == "verify") {
      result = verify();
    } else {
      fail(ErrorKind::usage, "unknown query '" + query_ + "'");
    }

    json body = {{"schema", schema_version},
                 {"status", violations_.empty() ? "ok" : "invalid"},
                 {"query", query_},
                 {"parameters", params_},
                 {"result", std::move(result)},
                 {"provenance", provenance_},
                 {"violations", violations_}};
    if (group_) body["group"] = to_json(*group_);
    if (!source_.empty()) body["source"] = source_;
    if (!target_.empty()) body["target"] = target_;
    return {std::move(body), violations_.empty() ? ExitStatus::ok : ExitStatus::data};
  }

 private:
  const GroupSpec& group() const {
    if (!group_) fail(ErrorKind::usage, "document has no 'group'");
    return *group_;
  }

  std::optional<std::int64_t> param_int(const char* key) const {
    if (!params_.contains(key)) return std::nullopt;
    const json& v = params_.at(key);
    if (!v.is_number_integer()) fail(ErrorKind::usage, std::string("parameter '") + key + "' must be an integer");
    return v.get<std::int64_t>();
  }

  std::optional<bool> param_bool(const char* key) const {
    if (!params_.contains(key)) return std::nullopt;
    const json& v = params_.at(key);
    if (!v.is_boolean()) fail(ErrorKind::usage, std::string("parameter '") + key + "' must be true or false");
    return v.get<bool>();
  }

  std::optional<std::string> param_string(const char* key) const {
    if (!params_.contains(key)) return std::nullopt;
    const json& v = params_.at(key);
    if (!v.is_string()) fail(ErrorKind::usage, std::string("parameter '") + key + "' must be a string");
    return v.get<std::string>();
  }

  Space space(const std::string& name) const {
    if (!spaces_.contains(name)) fail(ErrorKind::usage, "unknown space '" + name + "'");
    const json& j = spaces_.at(name);
    if (!j.is_object() || !j.contains("type") || !j.at("type").is_string()) {
      fail(ErrorKind::usage, "space '" + name + "' needs a string 'type'");
    }
    const auto type = j.at("type").get<std::string>();
    if (type == "rep_sphere") return rep_sphere_from_json(group(), j);
    if (type == "cohom_sphere") return cohom_sphere_from_json(group(), j);
    fail(ErrorKind::usage, "space '" + name + "' has unknown type '" + type + "'");
  }

  static CohomSphereData as_data(const Space& s) {
    if (const auto* rep = std::get_if<RepSphere>(&s)) return to_cohom_data(*rep);
    return std::get<CohomSphereData>(s);
  }

  std::string pick_source() {
    if (auto name = param_string("source")) return source_ = *name;
    if (spaces_.size() == 1) return source_ = spaces_.begin().key();
    fail(ErrorKind::usage, "parameter 'source' is required when the document has " +
                               std::to_string(spaces_.size()) + " spaces");
  }

  std::string pick_target() {
    if (auto name = param_string("target")) return target_ = *name;
    if (spaces_.size() == 2) {
      for (auto it = spaces_.begin(); it != spaces_.end(); ++it) {
        if (it.key() != source_) return target_ = it.key();
      }
    }
    fail(ErrorKind::usage, "parameter 'target' is required for query '" + query_ + "'");
  }

  bool has_target() const { return params_.contains("target") || spaces_.size() == 2; }

  // Length value of a data set, recording the polynomial-Euler assertion.
  LengthResult data_length(const CohomSphereData& d, bool from_representation) {
    std::vector<std::string> assumptions;
    bool polynomial = true;
    if (d.group.p() > 2 && !from_representation) {
      const auto flag = param_bool("euler_is_polynomial");
      polynomial = flag.value_or(true);
      if (!flag) {
        assumptions.emplace_back(
            "Euler class asserted polynomial by default (holds for G-ANR cohomology spheres)");
      } else if (polynomial) {
        assumptions.emplace_back("Euler class asserted polynomial by caller");
      }
    }
    const auto result = length_of_pair(d, polynomial);
    if (result.kind == LengthKind::interval && d.r >= 0) {
      assumptions.emplace_back("interval expressed in n - r; it matches [(n+1)/2, n+1] only when r = -1");
    }
    provenance_.push_back(provenance_entry("length", std::string(basis_tag(result.basis)), assumptions));
    return result;
  }

  json length() {
    const Space s = space(pick_source());
    const bool rep = std::holds_alternative<RepSphere>(s);
    const auto result = data_length(as_data(s), rep);
    if (rep) {
      const auto count = length_rep_sphere(std::get<RepSphere>(s));
      provenance_.push_back(provenance_entry("length", std::string(basis_tag(count.basis))));
      if (count.lo != result.lo) fail(ErrorKind::internal, "length formulas disagree");
    }
    return to_json(result);
  }

  json euler() {
    const auto d = as_data(space(pick_source()));
    const auto e = euler_class(d);
    provenance_.push_back(provenance_entry(
        "euler_class", "product of subtorus forms s_H^k_H",
        {"t_i has cohomological degree " + std::to_string(d.group.generator_degree())}));
    return to_json(e);
  }

  json validate_source() {
    const auto d = as_data(space(pick_source()));
    for (const auto& v : validate(d)) violations_.push_back(to_json(v));
    provenance_.push_back(provenance_entry("validate", "Smith range, Borel formula, parity, line normalization"));
    return {{"valid", violations_.empty()}};
  }

  json borsuk_ulam() {
    const auto x = as_data(space(pick_source()));
    const auto y = as_data(space(pick_target()));
    const auto verdict = borsuk_ulam_check(x, y);
    provenance_.push_back(provenance_entry("borsuk_ulam", "fixed-set dimension monotonicity under equivariant maps"));
    return to_json(verdict);
  }

  json map_exists() {
    const auto x = as_data(space(pick_source()));
    const Space t = space(pick_target());
    const auto* v = std::get_if<RepSphere>(&t);
    if (!v) fail(ErrorKind::usage, "map-exists needs a rep_sphere target");
    const auto verdict = map_exists_to_rep_sphere(x, *v);
    provenance_.push_back(provenance_entry("map_exists", "converse Borsuk-Ulam criterion for p-tori",
                                           {std::string(anr_assumption)}));
    return to_json(verdict);
  }

  json canonical() {
    const auto x = as_data(space(pick_source()));
    const auto target = canonical_target(x);
    provenance_.push_back(provenance_entry("canonical_target",
                                           "representation sphere with n(H)+1 orbit copies per line",
                                           {std::string(anr_assumption)}));
    json out = to_json(target);
    out["n"] = sphere_dim(target);
    return out;
  }

  json bourgin_yang() {
    std::optional<CohomSphereData> x;
    std::optional<CohomSphereData> y;
    if (!spaces_.empty()) {
      x = as_data(space(pick_source()));
      if (has_target()) y = as_data(space(pick_target()));
    }
    const auto p = param_int("p");
    if (!p && !group_) fail(ErrorKind::usage, "bourgin-yang needs parameter 'p' or a document group");
    if (p && group_ && *p != group_->p()) {
      fail(ErrorKind::usage, "parameter 'p' contradicts the document group");
    }
    BourginYangQuery q{p.value_or(group_ ? group_->p() : 0), 0, 0, 0};
    auto n = param_int("n");
    auto m = param_int("m");
    auto alpha = param_int("alpha");
    if (!n && x) n = x->n;
    if (!m && y) m = y->n;
    if (!alpha && x) {
      require_valid(*x);
      alpha = static_cast<std::int64_t>(x->fixed.size());
    }
    if (!n || !m || !alpha) fail(ErrorKind::usage, "bourgin-yang needs n, m and alpha (parameters or spaces)");
    q.n = *n;
    q.m = *m;
    q.alpha = *alpha;

    std::vector<std::string> assumptions = {"alpha counts corank-1 subtori with X^H inside Z_f (caller-supplied)"};
    if (q.p > 2) assumptions.emplace_back("target Euler class asserted polynomial");
    if (!param_int("alpha")) assumptions.emplace_back("alpha defaulted to the size of the source fixed table");
    provenance_.push_back(provenance_entry("bound_exact", "Bourgin-Yang length estimate", assumptions));
    json out = to_json(bourgin_yang_bound(q));
    if (q.n >= 0 && q.m >= 0) {
      out["manifold_bound"] = bourgin_yang_manifold(q.n, q.m);
      provenance_.push_back(provenance_entry(
          "manifold_bound", "Bourgin-Yang for closed orientable manifolds",
          {"source is a closed orientable manifold with H^i = 0 for 1 < i < n-1",
           "target complement has vanishing cohomology in degrees >= m"}));
    }
    return out;
  }

  json bounds() {
    const auto x = as_data(space(pick_source()));
    require_valid(x);
    json out;
    out["length"] = to_json(data_length(x, std::holds_alternative<RepSphere>(space(source_))));
    out["lower_bound"] = lower_bound_length(x);
    provenance_.push_back(provenance_entry("lower_bound", "sum of subtorus lengths"));
    const auto alpha = param_int("alpha").value_or(static_cast<std::int64_t>(x.fixed.size()));
    if (alpha >= 1 && x.n >= 0) {
      out["upper_bound"] = upper_bound_length(alpha, x.n);
      provenance_.push_back(provenance_entry("upper_bound", "orbit-count bound alpha*(dim+1)",
                                             {"alpha = number of maximal isotropy subgroups"}));
    }
    if (!x.group.is_torus()) {
      out["a_genus"] = a_genus_of_sphere(x);
      provenance_.push_back(provenance_entry("a_genus", "A-genus = A-cat = n+1", {std::string(anr_assumption)}));
    }
    if (has_target()) {
      const auto y = as_data(space(pick_target()));
      out["refined_bourgin_yang"] = to_json(refined_bourgin_yang(x, y));
      provenance_.push_back(provenance_entry("refined_bourgin_yang",
                                             "sum over lines of max(0, l_H(X) - l_H(Y)) bounds l(Z_f)"));
    }
    return out;
  }

  json verify() {
    const Space s = space(pick_source());
    const auto* rep = std::get_if<RepSphere>(&s);
    if (!rep) fail(ErrorKind::usage, "verify needs a rep_sphere source");
    const auto lambda_max =
        param_int("lambda_max").value_or(static_cast<std::int64_t>(rep->weights().size()) + 1);
    const auto report = cross_check(*rep, lambda_max, default_search_budget);
    provenance_.push_back(provenance_entry(
        "lambda", "exhaustive search for the smallest product of subtorus generators in (e)"));
    provenance_.push_back(provenance_entry("formula_value", "representation-sphere summand count"));
    return to_json(report);
  }

  json doc_;
  std::string query_;
  json params_;
  json spaces_;
  std::optional<GroupSpec> group_;
  std::string source_;
  std::string target_;
  json provenance_ = json::array();
  json violations_ = json::array();
};

Report error_report(ErrorKind kind, const std::string& message, const json& document) {
  json body = {{"schema", schema_version},
               {"status", "error"},
               {"error", {{"code", std::string(error_code(kind))}, {"message", message}}}};
  if (document.is_object() && document.contains("query")) body["query"] = document.at("query");
  return {std::move(body), exit_status_for(kind)};
}

json parse_value(const std::string& text) {
  json v = json::parse(text, nullptr, false);
  if (v.is_discarded() || v.is_object() || v.is_array()) return text;
  return v;
}

template <typename F>
Report guarded(const json& document, F&& body) {
  try {
    return body();
  } catch (const Error& e) {
    return error_report(e.kind(), e.what(), document);
  } catch (const json::exception& e) {
    return error_report(ErrorKind::usage, e.what(), document);
  } catch (const std::exception& e) {
    return error_report(ErrorKind::internal, e.what(), document);
  }
}

void render_text(const json& j, int indent, std::string& out) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const json& v = it.value();
    const bool scalar_array =
        v.is_array() && std::none_of(v.begin(), v.end(), [](const json& x) { return x.is_structured(); });
    if (v.is_object()) {
      out += pad + it.key() + ":\n";
      render_text(v, indent + 1, out);
    } else if (v.is_array() && !scalar_array) {
      out += pad + it.key() + ":\n";
      for (const auto& item : v) {
        if (item.is_object()) {
          out += pad + "  -\n";
          render_text(item, indent + 2, out);
        } else {
          out += pad + "  - " + item.dump() + "\n";
        }
      }
    } else {
      out += pad + it.key() + ": " + (v.is_string() ? v.get<std::string>() : v.dump()) + "\n";
    }
  }
}

}  // namespace

ExitStatus exit_status_for(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::usage: return ExitStatus::usage;
    case ErrorKind::search: return ExitStatus::search;
    default: return ExitStatus::data;
  }
}

const std::vector<std::string>& query_names() {
  static const std::vector<std::string> names = {"length",           "euler",        "validate",
                                                 "borsuk-ulam",      "map-exists",   "canonical-target",
                                                 "bourgin-yang",     "bounds",       "verify"};
  return names;
}

Report run_document(json document) {
  return guarded(document, [&] { return QueryRun(document).execute(); });
}

Report run(std::string_view document_text, const std::optional<std::string>& query,
           const std::vector<std::pair<std::string, std::string>>& params) {
  json document = json::parse(document_text, nullptr, false);
  if (document.is_discarded()) return error_report(ErrorKind::usage, "input is not valid JSON", json());
  if (!document.is_object()) return error_report(ErrorKind::usage, "document must be a JSON object", json());
  if (query) document["query"] = *query;
  if (!params.empty()) {
    json& p = document["parameters"];
    if (p.is_null()) p = json::object();
    if (!p.is_object()) return error_report(ErrorKind::usage, "'parameters' must be an object", document);
    for (const auto& [key, value] : params) p[key] = parse_value(value);
  }
  return run_document(std::move(document));
}

Report lint(std::string_view document_text) {
  json document = json::parse(document_text, nullptr, false);
  if (document.is_discarded()) return error_report(ErrorKind::usage, "input is not valid JSON", json());
  return guarded(document, [&]() -> Report {
    if (!document.is_object()) fail(ErrorKind::usage, "document must be a JSON object");
    const json spaces = document.value("spaces", json::object());
    if (!spaces.is_object()) fail(ErrorKind::usage, "'spaces' must be an object");
    std::optional<GroupSpec> group;
    if (document.contains("group")) group = group_from_json(document.at("group"));
    json violations = json::array();
    auto add = [&](const std::string& space, const std::string& code, const std::string& message) {
      violations.push_back({{"space", space}, {"code", code}, {"message", message}});
    };
    for (auto it = spaces.begin(); it != spaces.end(); ++it) {
      const json& j = it.value();
      if (!group) {
        add(it.key(), "group_missing", "document has no 'group'");
        continue;
      }
      const std::string type = j.is_object() ? j.value("type", "") : "";
      try {
        if (type == "rep_sphere") {
          for (const auto& v : validate(to_cohom_data(rep_sphere_from_json(*group, j)))) {
            add(it.key(), v.code, v.message);
          }
        } else if (type == "cohom_sphere") {
          for (const auto& v : validate(cohom_sphere_from_json(*group, j))) add(it.key(), v.code, v.message);
        } else {
          add(it.key(), "unknown_type", "space type must be rep_sphere or cohom_sphere");
        }
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::usage) throw;
        add(it.key(), "malformed_space", e.what());
      }
    }
    const bool clean = violations.empty();
    json body = {{"schema", schema_version},
                 {"status", clean ? "ok" : "invalid"},
                 {"query", "lint"},
                 {"result", {{"spaces_checked", spaces.size()}}},
                 {"provenance", json::array({provenance_entry(
                                    "violations", "Smith range, Borel formula, parity, line normalization")})},
                 {"violations", violations}};
    return {std::move(body), clean ? ExitStatus::ok : ExitStatus::data};
  });
}

std::string render(const Report& report, OutputFormat format) {
  if (format == OutputFormat::json) return report.body.dump(2) + "\n";
  std::string out;
  render_text(report.body, 0, out);
  return out;
}

}  // namespace cohomlen
