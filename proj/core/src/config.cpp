#include "stokes/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "stokes/errors.hpp"

namespace stokes {

namespace {

using boost::property_tree::ptree;
using sweep::CurveSpec;
using sweep::RunConfig;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

double parse_number(const std::string& field, const std::string& raw) {
  const std::string text = trim(raw);
  double value = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last)
    throw ConfigError(field + ": expected a number, got '" + text + "'");
  return value;
}

// Applies a single `key = value` of section `section` to a curve.
void apply_curve_key(CurveSpec& curve, const std::string& section, const std::string& key,
                     const std::string& value) {
  const std::string field = section + "." + key;
  if (section == "medium") {
    if (key == "tau_r") curve.medium.tau_r = parse_number(field, value);
    else if (key == "gamma1") curve.medium.gamma1 = parse_number(field, value);
    else if (key == "gamma2") curve.medium.gamma2 = parse_number(field, value);
    else if (key == "gamma_xpm") curve.medium.gamma_xpm = parse_number(field, value);
    else throw ConfigError(field + ": unknown key");
    return;
  }
  if (section == "pulse1" || section == "pulse2") {
    PulseParams& p = section == "pulse1" ? curve.pulse1 : curve.pulse2;
    if (key == "n_bar0") {
      p.n_bar0 = parse_number(field, value);
    } else if (key == "envelope") {
      const std::string kind = trim(value);
      if (kind == "constant") p.envelope = Envelope::constant();
      else if (kind == "gaussian") p.envelope = Envelope::gaussian(p.envelope.kind() == Envelope::Kind::gaussian ? p.envelope.tau_p() : 1.0);
      else throw ConfigError(field + ": expected 'constant' or 'gaussian', got '" + kind + "'");
    } else if (key == "tau_p") {
      const double tau_p = parse_number(field, value);
      if (!(tau_p > 0.0)) throw ConfigError(field + " must be positive");
      p.envelope = Envelope::gaussian(tau_p);
    } else {
      throw ConfigError(field + ": unknown key");
    }
    return;
  }
  throw ConfigError(field + ": unknown section for a curve override");
}

// Envelope keys are order-sensitive (tau_p implies gaussian); read envelope first.
void apply_pulse_section(CurveSpec& curve, const std::string& section, const ptree& keys) {
  bool constant = false;
  for (const auto& [key, node] : keys)
    if (key == "envelope" && trim(node.data()) == "constant") constant = true;
  for (const auto& [key, node] : keys)
    if (key == "envelope") apply_curve_key(curve, section, key, node.data());
  for (const auto& [key, node] : keys) {
    if (key == "envelope") continue;
    if (key == "tau_p" && constant) throw ConfigError(section + ".tau_p: given with a constant envelope");
    apply_curve_key(curve, section, key, node.data());
  }
}

// Shortest representation that parses back to the same double.
std::string fmt17(double v) {
  char buf[40];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

void write_curve_keys(std::ostream& os, const CurveSpec& c, bool qualified) {
  const auto key = [&](const char* section, const char* name) {
    return qualified ? std::string(section) + "." + name : std::string(name);
  };
  const auto medium = [&] {
    os << key("medium", "tau_r") << " = " << fmt17(c.medium.tau_r) << '\n';
    os << key("medium", "gamma1") << " = " << fmt17(c.medium.gamma1) << '\n';
    os << key("medium", "gamma2") << " = " << fmt17(c.medium.gamma2) << '\n';
    os << key("medium", "gamma_xpm") << " = " << fmt17(c.medium.gamma_xpm) << '\n';
  };
  const auto pulse = [&](const char* section, const PulseParams& p) {
    os << key(section, "n_bar0") << " = " << fmt17(p.n_bar0) << '\n';
    if (p.envelope.kind() == Envelope::Kind::gaussian) {
      os << key(section, "envelope") << " = gaussian\n";
      os << key(section, "tau_p") << " = " << fmt17(p.envelope.tau_p()) << '\n';
    } else {
      os << key(section, "envelope") << " = constant\n";
    }
  };
  if (qualified) {
    medium();
    pulse("pulse1", c.pulse1);
    pulse("pulse2", c.pulse2);
    return;
  }
  os << "[medium]\n";
  medium();
  os << "\n[pulse1]\n";
  pulse("pulse1", c.pulse1);
  os << "\n[pulse2]\n";
  pulse("pulse2", c.pulse2);
}

}  // namespace

RunConfig parse_config(std::istream& in, const std::string& source) {
  ptree tree;
  try {
    boost::property_tree::read_ini(in, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw ConfigError(source + ":" + std::to_string(e.line()) + ": " + e.message());
  }

  RunConfig cfg;
  CurveSpec base;
  base.label = "a";
  std::vector<std::pair<std::string, const ptree*>> overrides;

  try {
    for (const auto& [section, keys] : tree) {
      if (!keys.data().empty()) throw ConfigError(section + ": key outside of any section");
      if (section == "study") {
        for (const auto& [key, node] : keys) {
          if (key == "name") cfg.name = trim(node.data());
          else throw ConfigError("study." + key + ": unknown key");
        }
      } else if (section == "medium") {
        for (const auto& [key, node] : keys) apply_curve_key(base, section, key, node.data());
      } else if (section == "pulse1" || section == "pulse2") {
        apply_pulse_section(base, section, keys);
      } else if (section == "sweep") {
        for (const auto& [key, node] : keys) {
          const std::string field = "sweep." + key;
          const std::string& v = node.data();
          if (key == "variable") {
            const std::string var = trim(v);
            if (var == "phi01") cfg.sweep.variable = sweep::SweepVariable::phi01;
            else if (var == "omega") cfg.sweep.variable = sweep::SweepVariable::omega;
            else throw ConfigError(field + ": expected 'phi01' or 'omega', got '" + var + "'");
          } else if (key == "start") cfg.sweep.start = parse_number(field, v);
          else if (key == "stop") cfg.sweep.stop = parse_number(field, v);
          else if (key == "step") cfg.sweep.step = parse_number(field, v);
          else if (key == "omega") cfg.omega = parse_number(field, v);
          else if (key == "omega0") cfg.omega0 = parse_number(field, v);
          else if (key == "t") cfg.t = parse_number(field, v);
          else throw ConfigError(field + ": unknown key");
        }
      } else if (section == "output") {
        for (const auto& [key, node] : keys) {
          const std::string v = trim(node.data());
          if (key == "path") cfg.output_path = v;
          else if (key == "kind") {
            if (v == "normalized") cfg.emit_kind = SpectrumKind::normalized;
            else if (v == "raw") cfg.emit_kind = SpectrumKind::raw;
            else throw ConfigError("output.kind: expected 'normalized' or 'raw', got '" + v + "'");
          } else {
            throw ConfigError("output." + key + ": unknown key");
          }
        }
      } else if (section.rfind("curve.", 0) == 0 && section.size() > 6) {
        overrides.emplace_back(section.substr(6), &keys);
      } else {
        throw ConfigError(section + ": unknown section");
      }
    }

    if (overrides.empty()) {
      cfg.curves.push_back(base);
    } else {
      for (const auto& [label, keys] : overrides) {
        CurveSpec curve = base;
        curve.label = label;
        for (const std::string section : {"medium", "pulse1", "pulse2"}) {
          ptree pulse_keys;
          for (const auto& [qualified, node] : *keys) {
            const auto dot = qualified.find('.');
            if (dot == std::string::npos)
              throw ConfigError("curve." + label + "." + qualified + ": expected section.key");
            const std::string sec = qualified.substr(0, dot);
            if (sec != "medium" && sec != "pulse1" && sec != "pulse2")
              throw ConfigError("curve." + label + "." + qualified + ": unknown section");
            if (sec != section) continue;
            if (section == "medium") apply_curve_key(curve, sec, qualified.substr(dot + 1), node.data());
            else pulse_keys.push_back({qualified.substr(dot + 1), node});
          }
          if (section != "medium") apply_pulse_section(curve, section, pulse_keys);
        }
        cfg.curves.push_back(std::move(curve));
      }
    }
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }

  try {
    cfg.validate();
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open config file '" + path + "'");
  return parse_config(in, path);
}

std::string to_config_text(const RunConfig& config) {
  std::ostringstream os;
  os << "[study]\nname = " << config.name << "\n\n";
  if (!config.curves.empty()) {
    write_curve_keys(os, config.curves.front(), false);
    os << '\n';
  }
  os << "[sweep]\n";
  os << "variable = " << sweep::to_string(config.sweep.variable) << '\n';
  os << "start = " << fmt17(config.sweep.start) << '\n';
  os << "stop = " << fmt17(config.sweep.stop) << '\n';
  os << "step = " << fmt17(config.sweep.step) << '\n';
  os << "omega = " << fmt17(config.omega) << '\n';
  os << "omega0 = " << fmt17(config.omega0) << '\n';
  os << "t = " << fmt17(config.t) << "\n\n";
  os << "[output]\n";
  if (!config.output_path.empty()) os << "path = " << config.output_path << '\n';
  os << "kind = " << to_string(config.emit_kind) << '\n';
  for (const CurveSpec& c : config.curves) {
    os << "\n[curve." << c.label << "]\n";
    write_curve_keys(os, c, true);
  }
  return os.str();
}

}  // namespace stokes
