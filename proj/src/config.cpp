#include "qconf/config.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "qconf/errors.hpp"

namespace qconf {

namespace {

struct Entry {
  std::string value;
  int line = 0;
  bool used = false;
};

using Section = std::map<std::string, Entry>;

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double parse_real(const Entry& e, const std::string& key) {
  const std::string& v = e.value;
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size())
    throw config_error(e.line, "expected a real number for '" + key + "', got '" + v + "'");
  return out;
}

long long parse_int(const Entry& e, const std::string& key) {
  const std::string& v = e.value;
  long long out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size())
    throw config_error(e.line, "expected an integer for '" + key + "', got '" + v + "'");
  return out;
}

bool parse_bool(const Entry& e, const std::string& key) {
  if (e.value == "true") return true;
  if (e.value == "false") return false;
  throw config_error(e.line, "expected true or false for '" + key + "', got '" + e.value + "'");
}

/// The "inf" literal denotes lambda = infinity, i.e. Dirichlet.
BoundaryParam parse_boundary(const Entry& e, const std::string& key) {
  if (e.value == "inf") return BoundaryParam::dirichlet();
  return BoundaryParam::robin(parse_real(e, key));
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::stringstream ss(s);
  while (std::getline(ss, item, ',')) out.push_back(trim(item));
  if (!out.empty() && out.back().empty()) out.pop_back();
  return out;
}

class SectionReader {
 public:
  SectionReader(Section& section, std::string name) : section_(section), name_(std::move(name)) {}

  bool has(const std::string& key) const { return section_.count(key) > 0; }

  const Entry& require(const std::string& key) {
    auto it = section_.find(key);
    if (it == section_.end())
      throw config_error(0, "[" + name_ + "] is missing required key '" + key + "'");
    it->second.used = true;
    return it->second;
  }

  const Entry* optional(const std::string& key) {
    auto it = section_.find(key);
    if (it == section_.end()) return nullptr;
    it->second.used = true;
    return &it->second;
  }

  /// Every key must have been consumed; anything left is unknown.
  void finish() const {
    for (const auto& [key, entry] : section_) {
      if (!entry.used)
        throw config_error(entry.line, "unknown key '" + key + "' in section [" + name_ + "]");
    }
  }

 private:
  Section& section_;
  std::string name_;
};

Potential parse_potential(SectionReader& r) {
  const Entry& kind = r.require("kind");
  Potential v = Potential::zero();
  if (kind.value == "zero") {
    v = Potential::zero();
  } else if (kind.value == "harmonic") {
    v = Potential::harmonic(parse_real(r.require("omega"), "omega"));
  } else if (kind.value == "square_well") {
    const double depth = parse_real(r.require("depth"), "depth");
    const double width = parse_real(r.require("width"), "width");
    try {
      v = Potential::square_well(depth, width);
    } catch (const std::invalid_argument& e) {
      throw config_error(kind.line, e.what());
    }
  } else if (kind.value == "tabulated") {
    const Entry& nodes = r.require("nodes");
    std::vector<std::pair<double, double>> table;
    for (const std::string& item : split_list(nodes.value)) {
      const auto colon = item.find(':');
      if (colon == std::string::npos)
        throw config_error(nodes.line, "tabulated nodes must be 'x:V' pairs, got '" + item + "'");
      table.emplace_back(parse_real({trim(item.substr(0, colon)), nodes.line}, "nodes"),
                         parse_real({trim(item.substr(colon + 1)), nodes.line}, "nodes"));
    }
    try {
      v = Potential::tabulated(std::move(table));
    } catch (const config_error& e) {
      throw config_error(nodes.line, e.what());
    }
  } else {
    throw config_error(kind.line, "unknown potential kind '" + kind.value + "'");
  }
  if (const Entry* k = r.optional("quad_bound_k")) {
    try {
      v.set_quad_bound_k(parse_real(*k, "quad_bound_k"));
    } catch (const std::invalid_argument& e) {
      throw config_error(k->line, e.what());
    }
  }
  return v;
}

}  // namespace

ScenarioConfig parse_scenario(const std::string& text) {
  std::map<std::string, Section> sections;
  std::map<std::string, int> section_lines;

  const std::set<std::string> known_sections = {"grid", "potential", "bc",
                                                "spectrum", "evolve", "sweep", "verify"};

  std::istringstream in(text);
  std::string raw;
  std::string current;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw config_error(lineno, "malformed section header '" + line + "'");
      current = trim(line.substr(1, line.size() - 2));
      if (!known_sections.count(current))
        throw config_error(lineno, "unknown section [" + current + "]");
      if (sections.count(current))
        throw config_error(lineno, "duplicate section [" + current + "]");
      sections[current];
      section_lines[current] = lineno;
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw config_error(lineno, "expected 'key = value', got '" + line + "'");
    if (current.empty())
      throw config_error(lineno, "key/value pair outside of any section");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw config_error(lineno, "empty key");
    auto [it, inserted] = sections[current].emplace(key, Entry{value, lineno});
    if (!inserted)
      throw config_error(lineno, "duplicate key '" + key + "' in section [" + current + "]");
  }

  for (const std::string required : {"grid", "potential", "bc"}) {
    if (!sections.count(required))
      throw config_error(0, "missing required section [" + required + "]");
  }

  ScenarioConfig cfg;

  {
    SectionReader r(sections["grid"], "grid");
    const Entry& L = r.require("L");
    const Entry& n = r.require("n_per_side");
    try {
      cfg.grid = Grid(parse_real(L, "L"), static_cast<int>(parse_int(n, "n_per_side")));
    } catch (const std::invalid_argument& e) {
      throw config_error(section_lines["grid"], e.what());
    }
    r.finish();
  }
  {
    SectionReader r(sections["potential"], "potential");
    cfg.potential = parse_potential(r);
    r.finish();
  }
  {
    SectionReader r(sections["bc"], "bc");
    cfg.bc_left = parse_boundary(r.require("lambda_left"), "lambda_left");
    cfg.bc_right = parse_boundary(r.require("lambda_right"), "lambda_right");
    r.finish();
  }

  if (sections.count("spectrum")) {
    SectionReader r(sections["spectrum"], "spectrum");
    SpectrumConfig s;
    const Entry& count = r.require("count");
    s.count = static_cast<int>(parse_int(count, "count"));
    if (s.count < 0) throw config_error(count.line, "count must be nonnegative");
    r.finish();
    cfg.spectrum = s;
  }

  if (sections.count("evolve")) {
    SectionReader r(sections["evolve"], "evolve");
    EvolveConfig e;
    e.x0 = parse_real(r.require("x0"), "x0");
    e.p0 = parse_real(r.require("p0"), "p0");
    e.sigma = parse_real(r.require("sigma"), "sigma");
    const Entry& steps = r.require("n_steps");
    e.n_steps = parse_int(steps, "n_steps");
    if (e.n_steps < 1) throw config_error(steps.line, "n_steps must be at least 1");
    if (const Entry* dt = r.optional("dt")) {
      e.dt = parse_real(*dt, "dt");
      if (!(*e.dt > 0.0)) throw config_error(dt->line, "dt must be positive");
    }
    if (const Entry* rec = r.optional("record_every")) {
      e.record_every = parse_int(*rec, "record_every");
      if (e.record_every < 1) throw config_error(rec->line, "record_every must be at least 1");
    }
    if (const Entry* c = r.optional("confine_to_region"))
      e.confine_to_region = parse_bool(*c, "confine_to_region");
    if (const Entry* g = r.optional("global")) e.use_global = parse_bool(*g, "global");
    r.finish();
    cfg.evolve = e;
  }

  if (sections.count("sweep")) {
    SectionReader r(sections["sweep"], "sweep");
    SweepConfig s;
    const Entry& lambdas = r.require("lambdas");
    for (const std::string& item : split_list(lambdas.value)) {
      if (item == "inf")
        s.lambdas.push_back(std::nullopt);
      else
        s.lambdas.push_back(parse_real({item, lambdas.line}, "lambdas"));
    }
    if (s.lambdas.empty()) throw config_error(lambdas.line, "lambda ladder must be nonempty");
    if (const Entry* count = r.optional("count")) {
      s.count = static_cast<int>(parse_int(*count, "count"));
      if (s.count < 1) throw config_error(count->line, "count must be at least 1");
    }
    if (const Entry* side = r.optional("side")) {
      if (side->value == "left")
        s.side = Region::left;
      else if (side->value == "right")
        s.side = Region::right;
      else
        throw config_error(side->line, "side must be left or right");
    }
    r.finish();
    cfg.sweep = s;
  }

  if (sections.count("verify")) {
    SectionReader r(sections["verify"], "verify");
    VerifyConfig v;
    if (const Entry* seed = r.optional("seed"))
      v.seed = static_cast<std::uint64_t>(parse_int(*seed, "seed"));
    if (const Entry* cases = r.optional("cases_per_pair")) {
      v.cases_per_pair = static_cast<int>(parse_int(*cases, "cases_per_pair"));
      if (v.cases_per_pair < 1) throw config_error(cases->line, "cases_per_pair must be at least 1");
    }
    if (const Entry* flip = r.optional("flip_b1_sign"))
      v.flip_b1_sign = parse_bool(*flip, "flip_b1_sign");
    r.finish();
    cfg.verify = v;
  }

  return cfg;
}

ScenarioConfig load_scenario_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw config_error(0, "cannot open config file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str());
}

}  // namespace qconf
