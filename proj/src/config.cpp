#include "ffpat/config.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ffpat {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(int line, const std::string& msg) {
  throw std::invalid_argument("config line " + std::to_string(line) + ": " + msg);
}

std::int64_t parse_int(const std::string& text, int line) {
  const std::string t = trim(text);
  std::size_t used = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(t, &used);
  } catch (const std::exception&) {
    fail(line, "expected an integer, got '" + t + "'");
  }
  if (used != t.size()) fail(line, "expected an integer, got '" + t + "'");
  return v;
}

std::uint64_t parse_unsigned(const std::string& text, int line) {
  const std::int64_t v = parse_int(text, line);
  if (v < 0) fail(line, "expected a nonnegative integer");
  return static_cast<std::uint64_t>(v);
}

std::vector<std::int64_t> parse_list(const std::string& text, int line) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_int(item, line));
  if (out.empty()) fail(line, "expected a comma-separated list");
  return out;
}

std::vector<std::uint32_t> to_elements(const Fq& field, const std::vector<std::int64_t>& v, const char* what) {
  std::vector<std::uint32_t> out;
  for (const auto x : v) {
    if (x >= 0 && x < field.q()) {
      out.push_back(static_cast<std::uint32_t>(x));
    } else if (x < 0 && field.is_prime_field()) {
      out.push_back(field.from_int(x));
    } else {
      throw std::invalid_argument(std::string(what) + ": " + std::to_string(x) + " is not an element code of F_" +
                                  std::to_string(field.q()));
    }
  }
  return out;
}

}  // namespace

ReportFormat parse_format(const std::string& name) {
  if (name == "csv") return ReportFormat::csv;
  if (name == "json") return ReportFormat::json;
  throw std::invalid_argument("unknown report format '" + name + "' (expected csv or json)");
}

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string raw, section;
  int line = 0;
  bool have_p = false, have_n = false, have_r = false;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string body = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (body.empty()) continue;
    if (body.front() == '[') {
      if (body.back() != ']') fail(line, "unterminated section header");
      section = trim(body.substr(1, body.size() - 2));
      if (section != "field" && section != "family" && section != "run") fail(line, "unknown section [" + section + "]");
      continue;
    }
    const auto eq = body.find('=');
    if (eq == std::string::npos) fail(line, "expected key = value");
    const std::string key = trim(body.substr(0, eq));
    const std::string value = trim(body.substr(eq + 1));
    if (section.empty()) fail(line, "key '" + key + "' outside any section");

    if (section == "field") {
      if (key == "p") {
        cfg.p = static_cast<std::uint32_t>(parse_unsigned(value, line));
        have_p = true;
      } else if (key == "s") {
        cfg.s = static_cast<std::uint32_t>(parse_unsigned(value, line));
      } else {
        fail(line, "unknown key '" + key + "' in [field]");
      }
    } else if (section == "family") {
      if (key == "mode") {
        if (value == "linear") {
          cfg.mode = FamilyKind::linear;
        } else if (value == "prescribed") {
          cfg.mode = FamilyKind::prescribed;
        } else if (value == "global") {
          cfg.mode = FamilyKind::global;
        } else {
          fail(line, "mode must be linear, prescribed or global");
        }
      } else if (key == "n") {
        cfg.n = static_cast<unsigned>(parse_unsigned(value, line));
        have_n = true;
      } else if (key == "r") {
        cfg.r = static_cast<unsigned>(parse_unsigned(value, line));
        have_r = true;
      } else if (key == "row") {
        cfg.rows.push_back(parse_list(value, line));
      } else if (key == "alpha") {
        cfg.alpha = parse_list(value, line);
      } else if (key == "indices") {
        for (const auto v : parse_list(value, line)) {
          if (v < 0) fail(line, "indices must be nonnegative");
          cfg.indices.push_back(static_cast<unsigned>(v));
        }
      } else if (key == "index_convention") {
        if (value == "top") {
          cfg.power_convention = false;
        } else if (value == "power") {
          cfg.power_convention = true;
        } else {
          fail(line, "index_convention must be top or power");
        }
      } else {
        fail(line, "unknown key '" + key + "' in [family]");
      }
    } else {
      if (key == "budget") {
        cfg.budget = parse_unsigned(value, line);
      } else if (key == "workers") {
        cfg.workers = static_cast<unsigned>(parse_unsigned(value, line));
      } else if (key == "format") {
        try {
          cfg.format = parse_format(value);
        } catch (const std::invalid_argument& e) {
          fail(line, e.what());
        }
      } else if (key == "out") {
        cfg.out = value;
      } else {
        fail(line, "unknown key '" + key + "' in [run]");
      }
    }
  }
  if (!have_p) throw std::invalid_argument("config: [field] p is required");
  if (!have_n) throw std::invalid_argument("config: [family] n is required");
  if (cfg.mode == FamilyKind::linear) {
    if (!have_r) throw std::invalid_argument("config: linear mode requires r");
    if (cfg.rows.empty()) throw std::invalid_argument("config: linear mode requires at least one row");
  }
  if (cfg.mode == FamilyKind::prescribed && cfg.indices.empty()) {
    throw std::invalid_argument("config: prescribed mode requires indices");
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

LinearFamily make_family(const RunConfig& cfg) {
  const FqPtr field = make_fq(cfg.p, cfg.s);
  switch (cfg.mode) {
    case FamilyKind::global:
      return global_family(field, cfg.n);
    case FamilyKind::prescribed: {
      std::vector<unsigned> idx = cfg.indices;
      std::vector<std::uint32_t> alpha = to_elements(*field, cfg.alpha, "alpha");
      if (cfg.power_convention) {
        for (auto& i : idx) {
          if (i >= cfg.n) throw std::invalid_argument("prescribed_family: exponent must be below n");
          i = cfg.n - i;
        }
        if (alpha.size() != idx.size()) throw std::invalid_argument("prescribed_family: alpha must have one entry per index");
        std::vector<std::size_t> order(idx.size());
        for (std::size_t k = 0; k < order.size(); ++k) order[k] = k;
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return idx[a] < idx[b]; });
        std::vector<unsigned> sidx;
        std::vector<std::uint32_t> salpha;
        for (const auto k : order) {
          sidx.push_back(idx[k]);
          salpha.push_back(alpha[k]);
        }
        idx = std::move(sidx);
        alpha = std::move(salpha);
      }
      return prescribed_family(field, cfg.n, std::move(idx), std::move(alpha));
    }
    case FamilyKind::linear: {
      std::vector<std::vector<std::uint32_t>> rows;
      for (const auto& row : cfg.rows) rows.push_back(to_elements(*field, row, "row"));
      return new_family(field, cfg.n, cfg.r, std::move(rows), to_elements(*field, cfg.alpha, "alpha"));
    }
  }
  throw std::logic_error("make_family: unknown mode");
}

}  // namespace ffpat
