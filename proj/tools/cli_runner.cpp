#include "cli_runner.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "exsuper/euler.hpp"
#include "exsuper/verify.hpp"

namespace exsuper::cli {
namespace {

using nlohmann::json;

std::optional<SuperType> parse_type(const std::string& s) {
  if (s == "d") return SuperType::D2_1;
  if (s == "g3") return SuperType::G3;
  if (s == "f4") return SuperType::F3_1;
  return std::nullopt;
}

const char* branch_name(Branch b) {
  switch (b) {
    case Branch::ROOT: return "root";
    case Branch::REFLECTED: return "reflected";
    default: return "fixed";
  }
}

json weight_json(const Weight& w) { return json(w.c); }

json classification_json(const Classification& c) {
  json j;
  j["verdict"] = c.finite() ? "FINITE" : "INFINITE";
  if (c.witness_node) j["witness_node"] = *c.witness_node;
  if (c.witness_weight) j["witness_weight"] = weight_json(*c.witness_weight);
  if (c.matched_clause) j["clause"] = *c.matched_clause;
  return j;
}

struct InvalidRequest : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

ScalarContext make_context(SuperType type, const Request& req) {
  if (req.zeta && type != SuperType::D2_1)
    throw InvalidRequest("--zeta is only meaningful for --type d");
  if (req.characteristic != 0) {
    if (type != SuperType::D2_1) return ScalarContext::finite(type, req.characteristic);
    if (!req.zeta) throw InvalidRequest("--type d needs --zeta");
    if (*req.zeta == "generic")
      throw InvalidRequest("--zeta generic requires --char 0");
    return ScalarContext::finite_d(req.characteristic, std::stoll(*req.zeta));
  }
  if (type != SuperType::D2_1) return ScalarContext::char_zero(type);
  if (!req.zeta || *req.zeta == "generic") return ScalarContext::char_zero_d_generic();
  return ScalarContext::char_zero_d(Rat(std::stoll(*req.zeta)));
}

Weight need_weight(const Request& req, SuperType type, bool dominant) {
  if (!req.weight) throw InvalidRequest("--weight is required");
  if (req.weight->size() != weight_rank(type))
    throw InvalidRequest("--weight arity does not match the type");
  Weight w{*req.weight};
  if (dominant)
    for (long long c : w.c)
      if (c < 0) throw InvalidRequest("weight must be dominant (nonnegative)");
  return w;
}

std::vector<long long> need_box(const Request& req, SuperType type) {
  if (!req.box) throw InvalidRequest("--box is required");
  std::vector<long long> box = *req.box;
  if (box.size() == 1) box.assign(weight_rank(type), box[0]);
  if (box.size() != weight_rank(type))
    throw InvalidRequest("--box arity does not match the type");
  for (long long b : box)
    if (b < 0) throw InvalidRequest("box bounds must be nonnegative");
  return box;
}

Result dispatch(const Request& req) {
  auto type = parse_type(req.type);
  if (req.subcommand == "sweep") {
    if (req.characteristic < 3 || !is_prime(req.characteristic))
      throw InvalidRequest("sweep needs an odd prime --char");
    std::vector<long long> box =
        req.box ? need_box(req, SuperType::D2_1)
                : std::vector<long long>(3, 2 * req.characteristic);
    auto reports = zeta_sweep(req.characteristic, box);
    json j = json::array();
    bool clean = true;
    for (const auto& r : reports) {
      clean = clean && r.passed();
      j.push_back(to_json(r));
    }
    return {clean ? 0 : 1, j.dump(2) + "\n", ""};
  }
  if (!type) throw InvalidRequest("unknown --type (expected d, g3 or f4)");

  if (req.subcommand == "classify") {
    auto ctx = make_context(*type, req);
    Weight w = need_weight(req, *type, true);
    auto a = classify_by_reflections(w, *type, ctx);
    auto b = ctx.finite_char() ? classify_by_theorem(w, *type, ctx)
                               : classify_char0(w, *type, ctx);
    json j;
    j["finite"] = a.finite();
    j["method_a"] = classification_json(a);
    j["method_b"] = classification_json(b);
    return {0, j.dump(2) + "\n", ""};
  }
  if (req.subcommand == "chain") {
    auto ctx = make_context(*type, req);
    Weight w = need_weight(req, *type, false);
    auto res = chain(w, *type, ctx);
    json nodes = json::array();
    for (std::size_t i = 0; i < res.nodes.size(); ++i) {
      const auto& n = res.nodes[i];
      json jn;
      jn["node"] = i;
      jn["lambda"] = weight_json(n.lambda);
      jn["pairing"] = to_string(n.edge_pairing);
      jn["branch"] = branch_name(n.branch);
      nodes.push_back(jn);
    }
    return {0, json{{"nodes", nodes}}.dump(2) + "\n", ""};
  }
  if (req.subcommand == "list") {
    auto ctx = make_context(*type, req);
    auto box = need_box(req, *type);
    json j = json::array();
    for (const auto& w : list_finite(*type, ctx, box)) j.push_back(weight_json(w));
    return {0, j.dump(2) + "\n", ""};
  }
  if (req.subcommand == "verify") {
    auto ctx = make_context(*type, req);
    auto box = need_box(req, *type);
    auto report = verify_box(*type, ctx, box);
    return {report.passed() ? 0 : 1, to_json(report).dump(2) + "\n", ""};
  }
  if (req.subcommand == "chi") {
    auto ctx = make_context(*type, req);  // validates char/zeta combination
    (void)ctx;
    Weight w = need_weight(req, *type, false);
    Character c = euler_char(w, *type);
    json support = json::array();
    for (const auto& [e, coeff] : c.terms()) {
      MetricVector mu = c.unscale(e);
      json exp = json::array();
      for (const auto& x : mu.c) exp.push_back(to_string(x));
      support.push_back(json::array({exp, coeff}));
    }
    json j;
    j["support"] = support;
    if (!c.empty()) {
      TopTerm top = top_term(c, *type);
      json jt;
      jt["unique"] = top.unique();
      jt["coeff"] = top.coeff;
      if (top.weight) jt["weight"] = weight_json(*top.weight);
      j["top"] = jt;
    }
    return {0, j.dump(2) + "\n", ""};
  }
  throw InvalidRequest("unknown subcommand: " + req.subcommand);
}

}  // namespace

Result run(const Request& req) {
  try {
    return dispatch(req);
  } catch (const InvalidRequest& e) {
    return {2, "", e.what()};
  } catch (const UnsupportedCharacteristic& e) {
    return {2, "", e.what()};
  } catch (const std::invalid_argument& e) {
    return {2, "", e.what()};
  } catch (const std::out_of_range& e) {
    return {2, "", e.what()};
  }
}

int main_impl(int argc, char** argv) {
  CLI::App app{"finite-dimensionality classifier for exceptional supergroups"};
  app.require_subcommand(1);

  Request req;
  std::string weight_arg, box_arg;

  auto add_common = [&](CLI::App* sub, bool weight, bool box) {
    sub->add_option("--type", req.type, "d, g3 or f4");
    sub->add_option("--char", req.characteristic, "characteristic (prime or 0)");
    sub->add_option("--zeta", [&req](const std::vector<std::string>& v) {
      req.zeta = v.at(0);
      return true;
    }, "zeta parameter, integer or 'generic' (type d only)");
    if (weight)
      sub->add_option("--weight", weight_arg, "comma-separated coordinates");
    if (box) sub->add_option("--box", box_arg, "comma-separated bounds");
    sub->add_option("--out", req.out, "output path, '-' for stdout");
  };

  add_common(app.add_subcommand("classify", "decide finite dimensionality"),
             true, false);
  add_common(app.add_subcommand("chain", "odd-reflection transport of a weight"),
             true, false);
  add_common(app.add_subcommand("list", "finite-dimensional weights in a box"),
             false, true);
  add_common(app.add_subcommand("verify", "cross-validate the two methods"),
             false, true);
  add_common(app.add_subcommand("chi", "Euler characteristic of a weight"), true,
             false);
  add_common(app.add_subcommand("sweep", "verify across all zeta for a prime"),
             false, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  req.subcommand = app.get_subcommands().at(0)->get_name();
  auto parse_ints = [](const std::string& s) {
    std::vector<long long> out;
    std::size_t pos = 0;
    while (pos <= s.size()) {
      std::size_t comma = s.find(',', pos);
      if (comma == std::string::npos) comma = s.size();
      out.push_back(std::stoll(s.substr(pos, comma - pos)));
      pos = comma + 1;
    }
    return out;
  };
  try {
    if (!weight_arg.empty()) req.weight = parse_ints(weight_arg);
    if (!box_arg.empty()) req.box = parse_ints(box_arg);
  } catch (const std::exception&) {
    std::cerr << "error: malformed integer list\n";
    return 2;
  }

  Result res = run(req);
  if (res.exit_code == 2) {
    std::cerr << "error: " << res.error << "\n";
    return 2;
  }
  if (req.out == "-") {
    std::cout << res.json;
  } else {
    std::ofstream f(req.out);
    if (!f) {
      std::cerr << "error: cannot open " << req.out << "\n";
      return 2;
    }
    f << res.json;
  }
  return res.exit_code;
}

}  // namespace exsuper::cli
