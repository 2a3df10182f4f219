#pragma once

#include <cstdint>
#include <cstdlib>
#include <exception>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "viconj/context_json.hpp"
#include "viconj/delta_reduction.hpp"
#include "viconj/normal_form.hpp"
#include "viconj/oracle.hpp"
#include "viconj/presets.hpp"
#include "viconj/shift_infty.hpp"
#include "viconj/text.hpp"

namespace viconj::cli {

inline constexpr const char* context_env = "VICONJ_CONTEXT";

enum exit_code : int { ok = 0, negative = 1, error = 2 };

namespace detail {

struct Options {
  std::string ctx_path;
  std::string group;
  bool json = false;
  bool no_minimality = false;
  std::string delta;
  std::size_t len = 4;
  std::int64_t toff = 2;
  std::vector<std::string> operands;
};

// Where elements live: a validated context, or the shift group.
struct Setting {
  std::optional<LoadedContext> loaded;
  bool shift = false;

  WordSyntax syntax() const {
    if (loaded) return loaded->syntax();
    return {Alphabet::integers(), std::nullopt};
  }
};

inline std::string context_path(const Options& o) {
  if (!o.ctx_path.empty()) return o.ctx_path;
  if (const char* env = std::getenv(context_env)) return env;
  return {};
}

inline Setting resolve(const Options& o, bool need_context) {
  Setting s;
  if (o.group == "shift") {
    s.shift = true;
    return s;
  }
  if (o.group.starts_with("artin:")) {
    int m = 0;
    if (!viconj::detail::parse_int(std::string_view(o.group).substr(6), m)) {
      throw std::invalid_argument("malformed group '" + o.group + "'");
    }
    ArtinPreset p = artin(m);
    s.loaded = LoadedContext{std::move(p.context), p.alias, {}};
    return s;
  }
  if (!o.group.empty()) throw std::invalid_argument("unknown group '" + o.group + "'");

  const std::string path = context_path(o);
  if (path.empty()) {
    if (need_context) {
      throw std::invalid_argument(std::string("no context: pass --ctx, --group, or set ") +
                                  context_env);
    }
    return s;
  }
  nlohmann::json j = read_json_file(path);
  if (o.no_minimality) j["check_minimality"] = false;
  s.loaded = load_context(j);
  return s;
}

inline nlohmann::json element_json(std::int64_t t_exp, const Word& w) {
  return format_element(t_exp, w);
}

struct Reply {
  nlohmann::json result;
  nlohmann::json extra = nlohmann::json::object();
  std::vector<std::string> text;
  std::vector<std::string> diagnostics;
  int code = ok;
};

inline Reply cmd_reduce(const Options& o) {
  const Setting s = resolve(o, false);
  const ParsedElement e = parse_element(o.operands.at(0), s.syntax());
  Reply r;
  r.result = element_json(e.t_exp, e.x_part);
  r.text.push_back(r.result.get<std::string>());
  return r;
}

inline Reply cmd_cyclic_reduce(const Options& o) {
  const Setting s = resolve(o, false);
  const Word v = parse_word(o.operands.at(0), s.syntax());
  const CyclicReduction c = cyclically_reduce(v);
  Reply r;
  r.result = format_word(c.core);
  r.extra["collar"] = format_word(c.collar);
  r.text.push_back("core:   " + format_word(c.core));
  r.text.push_back("collar: " + format_word(c.collar));
  return r;
}

inline Reply cmd_delta_reduce(const Options& o) {
  const Setting s = resolve(o, o.delta.empty());
  const WordSyntax syntax = s.syntax();
  Word delta = o.delta.empty() ? s.loaded->context.delta() : parse_word(o.delta, syntax);
  const Word v = parse_word(o.operands.at(0), syntax);
  const DeltaOrbit orbit = delta_orbit(delta, v);
  const DeltaConjugate& best = orbit.minimal.front();

  Reply r;
  r.result = format_word(best.word);
  r.extra["exponent"] = best.exponent;
  nlohmann::json profile = nlohmann::json::array();
  std::string line = "profile:";
  for (const auto& p : orbit.profile) {
    profile.push_back({{"k", p.exponent}, {"length", p.length}});
    line += " " + std::to_string(p.exponent) + ":" + std::to_string(p.length);
  }
  r.extra["profile"] = profile;
  r.text.push_back("reduced:  " + format_word(best.word));
  r.text.push_back("exponent: " + std::to_string(best.exponent));
  if (orbit.commutes) r.text.push_back("delta commutes with the word");
  r.text.push_back(line);
  return r;
}

inline Reply shift_nf(const Setting& s, const std::string& text) {
  const ParsedElement e = parse_element(text, s.syntax());
  const ShiftNormalForm nf = shift_normal_form({e.t_exp, e.x_part});
  Reply r;
  r.result = element_json(nf.form.t_exp, nf.form.x_part);
  r.extra["normal_form"] = r.result;
  r.extra["certificate"] = element_json(nf.conjugator.t_exp, nf.conjugator.x_part);
  r.text.push_back("normal form: " + r.result.get<std::string>());
  r.text.push_back("certificate: " + r.extra["certificate"].get<std::string>());
  return r;
}

inline Reply shift_conj(const Setting& s, const std::string& a, const std::string& b) {
  const ParsedElement u = parse_element(a, s.syntax());
  const ParsedElement v = parse_element(b, s.syntax());
  const ShiftElement su{u.t_exp, u.x_part};
  const ShiftElement sv{v.t_exp, v.x_part};
  Reply r;
  const bool yes = shift_are_conjugate(su, sv);
  r.result = yes;
  r.code = yes ? ok : negative;
  if (yes) {
    const ShiftNormalForm nu = shift_normal_form(su);
    const ShiftNormalForm nv = shift_normal_form(sv);
    const ShiftElement c = multiply(nu.conjugator, inverse(nv.conjugator));
    r.extra["certificate"] = element_json(c.t_exp, c.x_part);
    r.text.push_back("conjugate");
    r.text.push_back("certificate: " + r.extra["certificate"].get<std::string>());
  } else {
    r.extra["certificate"] = nullptr;
    r.text.push_back("not conjugate");
  }
  return r;
}

inline Reply cmd_nf(const Options& o, bool force_shift) {
  Setting s = force_shift ? Setting{std::nullopt, true} : resolve(o, true);
  if (s.shift) return shift_nf(s, o.operands.at(0));

  const VIContext& ctx = s.loaded->context;
  const ParsedElement e = parse_element(o.operands.at(0), s.syntax());
  const NormalFormResult nf = normal_form(ctx, {e.t_exp, e.x_part});
  Reply r;
  r.result = element_json(nf.form.t_exp, nf.form.x_part);
  r.extra["normal_form"] = r.result;
  const ExtElement& c = nf.certificate.conjugator;
  r.extra["certificate"] = element_json(c.t_exp, c.x_part);
  r.extra["dbar_size"] = nf.dbar_size;
  r.diagnostics = nf.diagnostics;
  r.text.push_back("normal form: " + r.result.get<std::string>());
  r.text.push_back("certificate: " + r.extra["certificate"].get<std::string>());
  r.text.push_back("dbar size:   " + std::to_string(nf.dbar_size));
  return r;
}

inline Reply cmd_conj(const Options& o, bool force_shift) {
  Setting s = force_shift ? Setting{std::nullopt, true} : resolve(o, true);
  if (s.shift) return shift_conj(s, o.operands.at(0), o.operands.at(1));

  const VIContext& ctx = s.loaded->context;
  const ParsedElement u = parse_element(o.operands.at(0), s.syntax());
  const ParsedElement v = parse_element(o.operands.at(1), s.syntax());
  const ConjugacyResult res = are_conjugate(ctx, {u.t_exp, u.x_part}, {v.t_exp, v.x_part});
  Reply r;
  r.result = res.conjugate;
  r.code = res.conjugate ? ok : negative;
  r.diagnostics = res.diagnostics;
  if (res.certificate) {
    const ExtElement& c = res.certificate->conjugator;
    r.extra["certificate"] = element_json(c.t_exp, c.x_part);
    r.text.push_back("conjugate");
    r.text.push_back("certificate: " + r.extra["certificate"].get<std::string>());
  } else {
    r.extra["certificate"] = nullptr;
    r.text.push_back("not conjugate");
  }
  return r;
}

inline Reply cmd_oracle(const Options& o) {
  const Setting s = resolve(o, true);
  if (s.shift) throw std::invalid_argument("oracle needs a finitely generated context");
  const VIContext& ctx = s.loaded->context;
  const ParsedElement u = parse_element(o.operands.at(0), s.syntax());
  const ParsedElement v = parse_element(o.operands.at(1), s.syntax());
  const auto cert =
      brute_force_conjugacy(ctx, {u.t_exp, u.x_part}, {v.t_exp, v.x_part}, o.len, o.toff);
  Reply r;
  r.result = cert.has_value();
  r.code = cert ? ok : negative;
  r.extra["bounds"] = {{"len", o.len}, {"toff", o.toff}};
  if (cert) {
    const ExtElement& c = cert->conjugator;
    r.extra["certificate"] = element_json(c.t_exp, c.x_part);
    r.text.push_back("conjugate");
    r.text.push_back("certificate: " + r.extra["certificate"].get<std::string>());
  } else {
    r.extra["certificate"] = nullptr;
    r.text.push_back("no conjugator within |U| <= " + std::to_string(o.len) +
                     ", |a| <= " + std::to_string(o.toff));
  }
  return r;
}

inline Reply cmd_verify_ctx(const Options& o) {
  Reply r;
  if (o.group.starts_with("artin:")) {
    const Setting s = resolve(o, true);  // presets throw if they fail validation
    r.result = true;
    r.extra["context"] = context_to_json(s.loaded->context);
    r.text.push_back("context ok (m = " + std::to_string(s.loaded->context.m()) + ")");
    return r;
  }
  const std::string path = context_path(o);
  if (path.empty()) throw std::invalid_argument("verify-ctx needs --ctx, --group, or VICONJ_CONTEXT");
  nlohmann::json j = read_json_file(path);
  if (o.no_minimality) j["check_minimality"] = false;
  const ContextSpec spec = read_context_spec(j);
  const ValidationReport report = verify_vi(spec.data, spec.options);
  r.result = report.ok();
  r.code = report.ok() ? ok : negative;
  nlohmann::json issues = nlohmann::json::array();
  for (const auto& issue : report.issues) issues.push_back(issue.message);
  r.extra["issues"] = issues;
  r.extra["minimality_checked"] = report.minimality_checked;
  if (report.ok()) {
    r.text.push_back("context ok (m = " + std::to_string(spec.data.m) + ")");
    if (!report.minimality_checked) r.diagnostics.push_back("minimality of m not checked");
  } else {
    r.text.push_back("context invalid:");
    for (const auto& issue : report.issues) r.text.push_back("  " + issue.message);
  }
  return r;
}

}  // namespace detail

/// Runs one command line (without the program name). Results go to out,
/// errors to err; the return value is the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  detail::Options o;
  CLI::App app{"Conjugacy normal forms in free-by-cyclic groups with virtually inner action",
               "viconj"};
  app.require_subcommand(1);
  app.add_option("--ctx", o.ctx_path, "context JSON file (default: $VICONJ_CONTEXT)");
  app.add_option("--group", o.group, "preset group: artin:<m> or shift");
  app.add_flag("--json", o.json, "machine-readable output");
  app.add_flag("--no-minimality", o.no_minimality, "skip the minimality check of m");

  struct Sub {
    const char* name;
    const char* help;
    int arity;
  };
  const Sub subs[] = {
      {"reduce", "free reduction of an element", 1},
      {"cyclic-reduce", "cyclic reduction: core and collar", 1},
      {"delta-reduce", "shortest conjugate by a power of delta, with the length profile", 1},
      {"nf", "conjugacy normal form with certificate", 1},
      {"conj", "decide conjugacy of two elements", 2},
      {"shift-nf", "normal form in the shift group", 1},
      {"shift-conj", "conjugacy in the shift group", 2},
      {"oracle", "bounded brute-force conjugacy search", 2},
      {"verify-ctx", "check the identities of a context", 0},
  };
  std::string chosen;
  for (const Sub& sub : subs) {
    CLI::App* cmd = app.add_subcommand(sub.name, sub.help);
    cmd->fallthrough();
    if (sub.arity > 0) {
      cmd->add_option("elements", o.operands, "elements or words")
          ->required()
          ->expected(sub.arity);
    }
    if (std::string(sub.name) == "delta-reduce") {
      cmd->add_option("--delta", o.delta, "delta word (default: the context's)");
    }
    if (std::string(sub.name) == "oracle") {
      cmd->add_option("--len", o.len, "bound on the free part of the conjugator");
      cmd->add_option("--toff", o.toff, "bound on |t-exponent| of the conjugator");
    }
    cmd->callback([&chosen, name = sub.name] { chosen = name; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return error;
  }

  detail::Reply reply;
  try {
    if (chosen == "reduce") reply = detail::cmd_reduce(o);
    else if (chosen == "cyclic-reduce") reply = detail::cmd_cyclic_reduce(o);
    else if (chosen == "delta-reduce") reply = detail::cmd_delta_reduce(o);
    else if (chosen == "nf") reply = detail::cmd_nf(o, false);
    else if (chosen == "conj") reply = detail::cmd_conj(o, false);
    else if (chosen == "shift-nf") reply = detail::cmd_nf(o, true);
    else if (chosen == "shift-conj") reply = detail::cmd_conj(o, true);
    else if (chosen == "oracle") reply = detail::cmd_oracle(o);
    else reply = detail::cmd_verify_ctx(o);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return error;
  }

  if (o.json) {
    nlohmann::json j = reply.extra;
    j["command"] = chosen;
    j["result"] = reply.result;
    j["diagnostics"] = reply.diagnostics;
    if (!j.contains("certificate")) j["certificate"] = nullptr;
    out << j.dump(2) << "\n";
  } else {
    for (const auto& line : reply.text) out << line << "\n";
    for (const auto& d : reply.diagnostics) err << "warning: " << d << "\n";
  }
  return reply.code;
}

}  // namespace viconj::cli
