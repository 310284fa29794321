#include "cts/caps.hpp"

#include <charconv>
#include <cstdlib>

#include "cts/errors.hpp"

namespace cts {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Caps Caps::parse(std::string_view text, Caps base) {
  Caps caps = base;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto item = trim(text.substr(0, comma));
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item.empty()) continue;
    auto eq = item.find('=');
    if (eq == std::string_view::npos) throw ParseError("cap override without '=': " + std::string(item));
    auto key = trim(item.substr(0, eq));
    auto value = trim(item.substr(eq + 1));
    std::size_t v = 0;
    auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || ptr != value.data() + value.size())
      throw ParseError("bad cap value for " + std::string(key) + ": " + std::string(value));
    if (key == "shuffle_length") caps.shuffle_length = v;
    else if (key == "monoid_states") caps.monoid_states = v;
    else if (key == "monoid_elements") caps.monoid_elements = v;
    else if (key == "topo_sorts_vertices") caps.topo_sorts_vertices = v;
    else if (key == "brute_vertices") caps.brute_vertices = v;
    else if (key == "dp_states") caps.dp_states = v;
    else if (key == "dispatch_chains") caps.dispatch_chains = v;
    else if (key == "enumeration") caps.enumeration = v;
    else if (key == "group_order") caps.group_order = v;
    else throw ParseError("unknown cap: " + std::string(key));
  }
  return caps;
}

Caps Caps::parse(std::string_view text) { return parse(text, Caps()); }

Caps Caps::from_env() {
  const char* env = std::getenv("CTS_CAPS");
  return env ? parse(env) : Caps{};
}

}  // namespace cts
