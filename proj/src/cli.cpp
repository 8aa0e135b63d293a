#include "fockcat/cli.hpp"

#include "fockcat/fock.hpp"
#include "fockcat/gloracle.hpp"
#include "fockcat/jantzen.hpp"
#include "fockcat/klengine.hpp"
#include "fockcat/multiplicity.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fockcat::cli {

using Json = nlohmann::ordered_json;

// ---------------------------------------------------------------- config

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

int parse_nonneg(const std::string& value, const std::string& where) {
  try {
    std::size_t used = 0;
    int v = std::stoi(value, &used);
    if (used == value.size() && v >= 0) return v;
  } catch (const std::exception&) {
  }
  fail(ErrorKind::Parse, where + ": expected a nonnegative integer, got '" + value + "'");
}

}  // namespace

Config Config::parse(const std::string& text, const std::string& origin) {
  Config c;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;
    const std::string where = origin + ":" + std::to_string(lineno);
    const auto eq = line.find('=');
    if (eq == std::string::npos) fail(ErrorKind::Parse, where + ": expected key=value");
    const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (key == "cache_path") {
      if (value.empty()) fail(ErrorKind::Parse, where + ": empty cache_path");
      c.cache_path = value;
    } else if (key == "rank_buffer") {
      c.rank_buffer = parse_nonneg(value, where);
    } else if (key == "max_boxes") {
      c.max_boxes = parse_nonneg(value, where);
    } else {
      fail(ErrorKind::Parse, where + ": unknown key '" + key + "'");
    }
  }
  return c;
}

Config Config::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorKind::Parse, "cannot read config file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str(), path);
}

// ---------------------------------------------------------------- formatting

namespace {

Json int_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

Json mp_json(const Multipartition& m) {
  Json a = Json::array();
  for (const auto& p : m) a.push_back(p.parts());
  return a;
}

Json exprs_json(const std::vector<ParamExpr>& v) {
  Json a = Json::array();
  for (const auto& e : v) a.push_back(e.str());
  return a;
}

std::string table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width(header.size());
  auto measure = [&](const std::vector<std::string>& r) {
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  };
  measure(header);
  for (const auto& r : rows) measure(r);
  std::string out;
  auto line = [&](const std::vector<std::string>& r) {
    std::string l;
    for (std::size_t i = 0; i < r.size(); ++i) {
      l += r[i];
      if (i + 1 < r.size()) l += std::string(width[i] - r[i].size() + 2, ' ');
    }
    out += l + "\n";
  };
  line(header);
  std::vector<std::string> rule;
  for (auto w : width) rule.push_back(std::string(w, '-'));
  line(rule);
  for (const auto& r : rows) line(r);
  return out;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

std::string power(const ParamExpr& f, const Integer& e) { return "(" + f.str() + ")^" + e.get_str(); }

// What a handler produces: the JSON document and its human rendering.
struct Output {
  Json doc;
  std::string text;
};

void check_boxes(const Multipartition& m, const Config& cfg, const char* flag) {
  if (total_size(m) > cfg.max_boxes)
    fail(ErrorKind::ScaleLimit, std::string(flag) + " has " + std::to_string(total_size(m)) +
                                    " boxes, above max_boxes = " + std::to_string(cfg.max_boxes));
}

// ---------------------------------------------------------------- handlers

struct Args {
  std::string t, s, type, lhs, rhs, top, bottom, op, vec, lambda, mu, x, w, jl, jr, blocks;
  int i = 0, n = 0, degree = 0, extra = 1;
};

ParameterPoint point(const Args& a) { return ParameterPoint::make(parse_expr_list(a.t), parse_expr_list(a.s)); }

Output strata_classify(const Args& a) {
  const auto p = point(a);
  const auto sd = derive_stratum(p);
  Json parts = Json::array(), factors = Json::array();
  std::vector<std::vector<std::string>> rows;
  for (std::size_t l = 0; l < sd.parts.size(); ++l) {
    parts.push_back(sd.parts[l]);
    const auto& v = sd.verdicts[l];
    factors.push_back({{"sigma", sd.factors[l].sigma},
                       {"c", sd.factors[l].c},
                       {"kind", admissible_kind_name(v.kind)},
                       {"swap_index", v.swap_index ? Json(*v.swap_index) : Json(nullptr)}});
    std::string idx;
    for (int i : sd.parts[l]) idx += (idx.empty() ? "" : ",") + std::to_string(i);
    rows.push_back({std::to_string(l + 1), "{" + idx + "}", sd.factors[l].str(), admissible_kind_name(v.kind),
                    v.swap_index ? std::to_string(*v.swap_index) : "-"});
  }
  Json doc{{"t", exprs_json(p.t)},      {"s", exprs_json(p.s)},  {"gammas", exprs_json(sd.gammas)},
           {"parts", parts},           {"factors", factors},  {"admissible", sd.admissible}};
  std::string text = "gammas: ";
  for (std::size_t i = 0; i < sd.gammas.size(); ++i) text += (i ? ", " : "") + sd.gammas[i].str();
  text += "\n" + table({"part", "indices", "type", "kind", "swap"}, rows) + "admissible: " + yes_no(sd.admissible) + "\n";
  return {doc, text};
}

Output order_cmp(const Args& a, const Config& cfg) {
  const auto f = SignedTypeFactor::parse(a.type);
  const auto l = parse_multipartition(a.lhs), r = parse_multipartition(a.rhs);
  check_boxes(l, cfg, "--lhs");
  check_boxes(r, cfg, "--rhs");
  const bool leq = inv_dominance_leq(l, r, f), geq = inv_dominance_leq(r, l, f);
  return {Json{{"leq", leq}, {"geq", geq}}, "leq: " + yes_no(leq) + "\ngeq: " + yes_no(geq) + "\n"};
}

Output order_interval(const Args& a, const Config& cfg) {
  const auto f = SignedTypeFactor::parse(a.type);
  const auto top = parse_multipartition(a.top), bottom = parse_multipartition(a.bottom);
  check_boxes(top, cfg, "--top");
  check_boxes(bottom, cfg, "--bottom");
  Json list = Json::array();
  std::string text;
  for (const auto& m : interval(top, bottom, f)) {
    list.push_back(mp_json(m));
    text += to_string(m) + "\n";
  }
  if (list.empty()) text = "(empty)\n";
  return {Json{{"interval", list}}, text};
}

Output fock_act(const Args& a, const Config& cfg) {
  const auto f = SignedTypeFactor::parse(a.type);
  const auto v = parse_multipartition(a.vec);
  check_boxes(v, cfg, "--vec");
  if (a.op != "e" && a.op != "f") fail(ErrorKind::Parse, "--op must be e or f");
  const auto res = a.op == "e" ? e_action(a.i, v, f) : f_action(a.i, v, f);
  Json terms = Json::array();
  std::vector<std::vector<std::string>> rows;
  for (const auto& [label, c] : res.terms()) {
    terms.push_back({{"label", mp_json(label)}, {"coeff", int_json(c)}});
    rows.push_back({c.get_str(), to_string(label)});
  }
  return {Json{{"op", a.op}, {"i", a.i}, {"terms", terms}},
          rows.empty() ? std::string("0\n") : table({"coeff", "label"}, rows)};
}

Output jantzen_sum_cmd(const Args& a, const Config& cfg) {
  const auto p = point(a);
  const auto lam = parse_multipartition(a.lambda);
  check_boxes(lam, cfg, "--lambda");
  const auto sum = jantzen_sum(lam, p, cfg.max_boxes);
  Json terms = Json::array();
  std::vector<std::vector<std::string>> rows;
  for (const auto& t : sum.terms) {
    terms.push_back({{"label", mp_json(t.label)}, {"sign", t.sign}, {"part", t.part}, {"chi", t.chi}});
    rows.push_back({t.sign > 0 ? "+1" : "-1", to_string(t.label), std::to_string(t.part),
                    std::to_string(t.chi[0]) + "," + std::to_string(t.chi[1]) + "," + std::to_string(t.chi[2]) +
                        "," + std::to_string(t.chi[3])});
  }
  Json doc{{"terms", terms},
           {"complete", sum.complete},
           {"exact_up_to", sum.complete ? Json(nullptr) : Json(sum.exact_up_to)}};
  std::string text = rows.empty() ? std::string("(no terms)\n") : table({"sign", "label", "part", "chi"}, rows);
  if (!sum.complete) text += "truncated: exact for labels with at most " + std::to_string(sum.exact_up_to) + " boxes\n";
  return {doc, text};
}

Output jantzen_det_cmd(const Args& a, const Config& cfg) {
  if (a.mu.empty()) fail(ErrorKind::Parse, "jantzen det needs --mu");
  const auto p = point(a);
  require_nonintegral_ranks(p);
  const auto lam = parse_multipartition(a.lambda), mu = parse_multipartition(a.mu);
  check_boxes(lam, cfg, "--lambda");
  check_boxes(mu, cfg, "--mu");
  Json factors = Json::array();
  std::vector<std::vector<std::string>> rows;
  for (const auto& f : shapovalov_factors(lam, mu, p)) {
    factors.push_back({{"factor", f.factor.str()}, {"exponent", int_json(f.exponent)}});
    rows.push_back({f.factor.str(), f.exponent.get_str()});
  }
  return {Json{{"factors", factors}}, rows.empty() ? std::string("1 (no factors)\n") : table({"factor", "exponent"}, rows)};
}

Output jantzen_simple_cmd(const Args& a, const Config& cfg) {
  const auto p = point(a);
  const auto lam = parse_multipartition(a.lambda);
  check_boxes(lam, cfg, "--lambda");
  const bool simple = is_verma_simple(lam, p, cfg.max_boxes);
  return {Json{{"simple", simple}}, "simple: " + yes_no(simple) + "\n"};
}

Output mult_verma_cmd(const Args& a, const Config& cfg) {
  const auto p = point(a);
  const auto lam = parse_multipartition(a.lambda), mu = parse_multipartition(a.mu);
  check_boxes(lam, cfg, "--lambda");
  check_boxes(mu, cfg, "--mu");
  const Integer m = verma_multiplicity(lam, mu, p, MultiplicityOptions{cfg.rank_buffer});
  return {Json{{"multiplicity", int_json(m)}}, "multiplicity: " + m.get_str() + "\n"};
}

Output mult_stabilize_cmd(const Args& a, const Config& cfg) {
  if (a.extra < 1) fail(ErrorKind::Parse, "--extra must be positive");
  const auto p = point(a);
  const auto lam = parse_multipartition(a.lambda), mu = parse_multipartition(a.mu);
  check_boxes(lam, cfg, "--lambda");
  check_boxes(mu, cfg, "--mu");
  const auto report = stabilization_report(lam, mu, p, a.extra, MultiplicityOptions{cfg.rank_buffer});
  bool stable = true;
  Json rows_json = Json::array();
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : report) {
    stable = stable && r.at_N == r.at_N_extra;
    rows_json.push_back({{"part", r.part}, {"N", r.N}, {"at_N", int_json(r.at_N)}, {"at_N_extra", int_json(r.at_N_extra)}});
    rows.push_back({std::to_string(r.part), std::to_string(r.N), r.at_N.get_str(), r.at_N_extra.get_str()});
  }
  return {Json{{"stable", stable}, {"extra", a.extra}, {"rows", rows_json}},
          table({"part", "N", "at N", "at N+" + std::to_string(a.extra)}, rows) + "stable: " + yes_no(stable) + "\n"};
}

Output kl_poly_cmd(const Args& a) {
  if (a.n < 1) fail(ErrorKind::Parse, "--n must be positive");
  const auto x = parse_permutation(a.x), w = parse_permutation(a.w);
  if (static_cast<int>(x.size()) != a.n || static_cast<int>(w.size()) != a.n)
    fail(ErrorKind::Parse, "permutations must have length " + std::to_string(a.n));
  const ReflectionSet jl = parse_reflection_set(a.jl, a.n), jr = parse_reflection_set(a.jr, a.n);
  const LaurentPoly p = (jl == 0 && jr == 0) ? kl_polynomial(x, w) : canonical_coeff(jl, jr, x, w);
  Json coeffs = Json::array();
  for (const auto& c : p.dense()) coeffs.push_back(int_json(c));
  return {Json{{"n", a.n},
               {"x", permutation_str(x)},
               {"w", permutation_str(w)},
               {"jl", reflection_set_str(jl)},
               {"jr", reflection_set_str(jr)},
               {"coefficients", coeffs}},
          "P = " + p.str() + "\n"};
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  for (int v : gl::parse_weight(text)) out.push_back(v);
  return out;
}

Json factors_json(const std::vector<gl::LinearFactor>& fs) {
  Json a = Json::array();
  for (const auto& f : fs) a.push_back({{"factor", f.factor.str()}, {"exponent", int_json(f.exponent)}});
  return a;
}

std::string factors_text(const std::vector<gl::LinearFactor>& fs) {
  if (fs.empty()) return "1";
  std::string s;
  for (const auto& f : fs) s += (s.empty() ? "" : " ") + power(f.factor, f.exponent);
  return s;
}

Output oracle_cmd(const Args& a, bool compare) {
  const auto st = gl::Setup::make(parse_int_list(a.blocks), gl::parse_weight(a.lambda));
  Json labels = Json::array();
  std::vector<std::vector<std::string>> rows;
  bool all_match = true;
  for (const auto& [mu, r] : gl::isotypic_labels(st, a.degree)) {
    const auto split = gl::gram_factors(st, mu);
    Json entry{{"mu", mu}, {"multiplicity", int_json(r)}, {"degree", *st.degree_of(mu)},
               {"scalar", to_string(split.scalar)}, {"complete", split.complete()},
               {"gram", factors_json(split.factors)}};
    std::vector<std::string> row{gl::weight_str(mu), std::to_string(*st.degree_of(mu)), r.get_str(),
                                 factors_text(split.factors) + (split.complete() ? "" : " * (" + split.remainder.str() + ")")};
    if (compare) {
      const auto classical = gl::classical_jantzen(st, mu);
      const bool match = split.complete() && split.factors == classical;
      all_match = all_match && match;
      entry["classical"] = factors_json(classical);
      entry["match"] = match;
      row.push_back(factors_text(classical));
      row.push_back(yes_no(match));
    }
    labels.push_back(entry);
    rows.push_back(row);
  }
  Json doc{{"blocks", st.blocks}, {"lambda", st.lambda}, {"degree", a.degree}, {"labels", labels}};
  std::vector<std::string> header{"mu", "deg", "mult", "gram"};
  if (compare) {
    doc["all_match"] = all_match;
    header.push_back("classical");
    header.push_back("match");
  }
  std::string text = rows.empty() ? std::string("(no isotypic labels)\n") : table(header, rows);
  if (compare) text += "all match: " + yes_no(all_match) + "\n";
  return {doc, text};
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::IntegerRank:
    case ErrorKind::InadmissibleStratum:
    case ErrorKind::RankTooSmall:
    case ErrorKind::ScaleLimit:
      return kDomainError;
    case ErrorKind::Parse:
    case ErrorKind::ArityMismatch:
    case ErrorKind::InvalidArgument:
      return kUsageError;
  }
  return kDomainError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"fockcat: parabolic category O in complex rank, Fock spaces and finite-rank oracles", "fockcat"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  std::string config_path, cache_path;
  int rank_buffer = 0, max_boxes = 0;
  app.add_flag("--json", json, "emit a JSON document");
  auto* o_config = app.add_option("--config", config_path, "key=value config file (default: $FOCKCAT_CONFIG)");
  auto* o_cache = app.add_option("--cache-path", cache_path, "KL cache file");
  auto* o_buffer = app.add_option("--rank-buffer", rank_buffer, "added to every rank bound")->check(CLI::NonNegativeNumber);
  auto* o_boxes = app.add_option("--max-boxes", max_boxes, "cap on label sizes")->check(CLI::NonNegativeNumber);

  Args a;
  auto group = [&](const char* name, const char* help) {
    auto* g = app.add_subcommand(name, help);
    g->require_subcommand(1);
    g->fallthrough();
    return g;
  };
  auto leaf = [](CLI::App* parent, const char* name, const char* help) {
    auto* c = parent->add_subcommand(name, help);
    c->fallthrough();
    return c;
  };
  auto point_opts = [&](CLI::App* c) {
    c->add_option("--t", a.t, "ranks t_1..t_n, comma separated")->required();
    c->add_option("--s", a.s, "shifts s_1..s_n, comma separated")->required();
  };

  auto* strata = group("strata", "parameter strata");
  auto* classify = leaf(strata, "classify", "stratum data of a parameter point");
  point_opts(classify);

  auto* order = group("order", "inverse dominance order of a type");
  auto* cmp = leaf(order, "cmp", "compare two multipartitions");
  cmp->add_option("--type", a.type, "type 'sigma;c'")->required();
  cmp->add_option("--lhs", a.lhs)->required();
  cmp->add_option("--rhs", a.rhs)->required();
  auto* ival = leaf(order, "interval", "all labels between bottom and top");
  ival->add_option("--type", a.type, "type 'sigma;c'")->required();
  ival->add_option("--top", a.top)->required();
  ival->add_option("--bottom", a.bottom)->required();

  auto* fock = group("fock", "Fock space tensor products");
  auto* act = leaf(fock, "act", "apply e_i or f_i to a basis vector");
  act->add_option("--op", a.op, "e or f")->required()->check(CLI::IsMember({"e", "f"}));
  act->add_option("--i", a.i, "residue")->required();
  act->add_option("--type", a.type, "type 'sigma;c'")->required();
  act->add_option("--vec", a.vec, "multipartition")->required();

  auto* jz = group("jantzen", "Jantzen sums and Shapovalov determinants");
  CLI::App* jz_cmds[3];
  const char* jz_names[3] = {"sum", "det", "simple"};
  for (int k = 0; k < 3; ++k) {
    jz_cmds[k] = leaf(jz, jz_names[k], k == 0 ? "Jantzen sum" : k == 1 ? "Shapovalov factors for --mu" : "simplicity");
    point_opts(jz_cmds[k]);
    jz_cmds[k]->add_option("--lambda", a.lambda)->required();
    jz_cmds[k]->add_option("--mu", a.mu);
  }

  auto* mult = group("mult", "composition multiplicities");
  auto* verma = leaf(mult, "verma", "[M(lambda) : L(mu)]");
  auto* stab = leaf(mult, "stabilize", "rank stabilization per class");
  for (auto* c : {verma, stab}) {
    point_opts(c);
    c->add_option("--lambda", a.lambda)->required();
    c->add_option("--mu", a.mu)->required();
  }
  stab->add_option("--extra", a.extra, "rank increment (default 1)");

  auto* kl = group("kl", "Kazhdan-Lusztig polynomials");
  auto* klp = leaf(kl, "poly", "P_{x,w} or a parabolic canonical coefficient");
  klp->add_option("--n", a.n, "rank d of S_d")->required();
  klp->add_option("--x", a.x)->required();
  klp->add_option("--w", a.w)->required();
  klp->add_option("--jl", a.jl, "left reflection set, e.g. 1,3");
  klp->add_option("--jr", a.jr, "right reflection set");

  auto* orc = group("oracle", "finite-rank gl_M oracle");
  auto* shap = leaf(orc, "shapovalov", "isotypic Gram determinants");
  auto* comp = leaf(orc, "compare", "Gram determinants against the classical product");
  for (auto* c : {shap, comp}) {
    c->add_option("--blocks", a.blocks, "Levi block sizes")->required();
    c->add_option("--lambda", a.lambda, "integral weight")->required();
    c->add_option("--degree", a.degree)->required();
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help("", CLI::AppFormatMode::All);
    return kUsageError;
  }

  try {
    Config cfg;
    if (o_config->count()) {
      cfg = Config::load(config_path);
    } else if (const char* env = std::getenv("FOCKCAT_CONFIG"); env && *env) {
      cfg = Config::load(env);
    }
    if (o_cache->count()) cfg.cache_path = cache_path;
    if (o_buffer->count()) cfg.rank_buffer = rank_buffer;
    if (o_boxes->count()) cfg.max_boxes = max_boxes;

    kl_cache().clear();
    if (cfg.cache_path) kl_cache().load(*cfg.cache_path);

    Output res;
    if (classify->parsed()) res = strata_classify(a);
    else if (cmp->parsed()) res = order_cmp(a, cfg);
    else if (ival->parsed()) res = order_interval(a, cfg);
    else if (act->parsed()) res = fock_act(a, cfg);
    else if (jz_cmds[0]->parsed()) res = jantzen_sum_cmd(a, cfg);
    else if (jz_cmds[1]->parsed()) res = jantzen_det_cmd(a, cfg);
    else if (jz_cmds[2]->parsed()) res = jantzen_simple_cmd(a, cfg);
    else if (verma->parsed()) res = mult_verma_cmd(a, cfg);
    else if (stab->parsed()) res = mult_stabilize_cmd(a, cfg);
    else if (klp->parsed()) res = kl_poly_cmd(a);
    else if (shap->parsed()) res = oracle_cmd(a, false);
    else if (comp->parsed()) res = oracle_cmd(a, true);
    else fail(ErrorKind::Parse, "no command given");

    if (cfg.cache_path) kl_cache().save(*cfg.cache_path);
    if (json)
      out << res.doc.dump(2) << "\n";
    else
      out << res.text;
    return kOk;
  } catch (const Error& e) {
    err << "error (" << error_kind_name(e.kind()) << "): " << e.what() << "\n";
    const int code = exit_code(e.kind());
    if (code == kUsageError) err << "run with --help for usage\n";
    return code;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kDomainError;
  }
}

}  // namespace fockcat::cli
