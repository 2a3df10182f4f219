#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "viconj/automorphism.hpp"
#include "viconj/context.hpp"
#include "viconj/text.hpp"

namespace viconj {

// Context file schema:
//   {"rank": 2, "t_order": "inf" | <int>, "images": ["x1 x2 x1^-1", "x1"],
//    "m": 2, "delta": "x2^-1 x1^-1",          (both optional)
//    "check_minimality": true, "search_bound": 12, "alias": "y"}   (optional)
// Without m, the loader searches j = 1..search_bound for the first inner phi^j.

struct LoadedContext {
  VIContext context;
  std::optional<char> alias;
  std::vector<std::string> notes;

  WordSyntax syntax() const { return {context.alphabet(), alias}; }
};

/// The parsed file before validation.
struct ContextSpec {
  ContextData data;
  ValidationOptions options;
  std::optional<char> alias;
};

inline ContextSpec read_context_spec(const nlohmann::json& j) {
  auto require = [&](const char* key) -> const nlohmann::json& {
    if (!j.contains(key)) throw std::invalid_argument(std::string("context is missing '") + key + "'");
    return j.at(key);
  };
  ContextData data;
  data.rank = require("rank").get<int>();
  if (data.rank < 2) throw std::invalid_argument("context rank must be at least 2");

  const auto& order = require("t_order");
  if (order.is_string()) {
    if (order.get<std::string>() != "inf") {
      throw std::invalid_argument("t_order must be \"inf\" or a positive integer");
    }
  } else {
    data.t_order = order.get<std::int64_t>();
  }

  std::optional<char> alias;
  if (j.contains("alias")) {
    const auto a = j.at("alias").get<std::string>();
    if (a.size() != 1 || a == "x" || a == "t") throw std::invalid_argument("alias must be one letter other than x or t");
    alias = a[0];
  }
  const WordSyntax syntax{Alphabet::of_rank(data.rank), alias};

  const auto& images_json = require("images");
  std::vector<Word> images;
  for (const auto& img : images_json) images.push_back(parse_word(img.get<std::string>(), syntax));
  data.phi = Automorphism(data.rank, std::move(images));

  ValidationOptions options;
  options.check_minimality = j.value("check_minimality", true);
  const int search_bound = j.value("search_bound", 12);

  if (j.contains("m")) {
    data.m = j.at("m").get<int>();
    if (j.contains("delta")) {
      data.delta = parse_word(j.at("delta").get<std::string>(), syntax);
    } else {
      const auto w = find_inner_witness(data.phi.power(data.m));
      if (!w) throw std::invalid_argument("phi^" + std::to_string(data.m) + " is not inner");
      data.delta = *w;
    }
  } else {
    // The first inner power found is the minimal one.
    Automorphism power = data.phi;
    bool found = false;
    for (int k = 1; k <= search_bound && !found; ++k) {
      if (auto w = find_inner_witness(power)) {
        data.m = k;
        data.delta = *w;
        found = true;
      } else {
        power = data.phi.after(power);
      }
    }
    if (!found) {
      throw std::invalid_argument("no inner power of phi found up to " +
                                  std::to_string(search_bound));
    }
  }

  return {std::move(data), options, alias};
}

inline LoadedContext load_context(const nlohmann::json& j) {
  ContextSpec spec = read_context_spec(j);
  const bool checked = spec.options.check_minimality;
  LoadedContext out{VIContext::create(std::move(spec.data), spec.options), spec.alias, {}};
  if (!checked) {
    out.notes.push_back("minimality of m not checked; results carry a non-minimal m warning");
  }
  return out;
}

inline nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open context file '" + path + "'");
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument("context file '" + path + "': " + e.what());
  }
  return j;
}

inline LoadedContext load_context_file(const std::string& path) {
  return load_context(read_json_file(path));
}

inline nlohmann::json context_to_json(const VIContext& ctx) {
  nlohmann::json j;
  j["rank"] = ctx.rank();
  if (ctx.t_order()) {
    j["t_order"] = *ctx.t_order();
  } else {
    j["t_order"] = "inf";
  }
  nlohmann::json images = nlohmann::json::array();
  for (const Word& w : ctx.phi().images()) images.push_back(format_word(w));
  j["images"] = images;
  j["m"] = ctx.m();
  j["delta"] = format_word(ctx.delta());
  return j;
}

}  // namespace viconj
