#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "orbideg/circle_map.hpp"
#include "orbideg/degree.hpp"
#include "orbideg/errors.hpp"
#include "orbideg/serialize.hpp"
#include "orbideg/slice_lift.hpp"
#include "orbideg/strata.hpp"
#include "orbideg/verify.hpp"

using namespace orbideg;

namespace {

struct MapArgs {
  std::string q, r, e, map;
};

void add_map_options(CLI::App* sub, MapArgs& m) {
  sub->add_option("--q", m.q, "source weights, e.g. 1,1");
  sub->add_option("--r", m.r, "target weights, e.g. 1,3");
  sub->add_option("--e", m.e, "exponents, e.g. 1,3");
  sub->add_option("--map", m.map, "JSON descriptor {\"q\",\"r\",\"e\"}, or @file");
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidInput, "cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
}

MonomialMap build_map(const MapArgs& m) {
  if (!m.map.empty()) {
    if (!m.q.empty() || !m.r.empty() || !m.e.empty()) {
      throw Error(ErrorKind::InvalidInput, "use either --map or --q/--r/--e");
    }
    return map_from_json(parse_json(m.map.front() == '@' ? slurp(m.map.substr(1)) : m.map));
  }
  if (m.q.empty() || m.r.empty() || m.e.empty()) {
    throw Error(ErrorKind::InvalidInput, "a map needs --q, --r and --e (or --map)");
  }
  return MonomialMap(parse_weights(m.q), parse_weights(m.r), parse_weights(m.e));
}

std::vector<std::complex<double>> parse_reals(const std::string& text) {
  std::vector<std::complex<double>> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      out.emplace_back(std::stod(part, &used), 0.0);
      if (part.find_first_not_of(" \t", used) != std::string::npos) throw std::invalid_argument("");
    } catch (const std::logic_error&) {
      throw Error(ErrorKind::InvalidInput, "malformed real list '" + text + "'");
    }
  }
  return out;
}

CircleQuotient parse_circle(const std::string& text) {
  if (text == "reflection") return CircleQuotient::reflection();
  if (text == "circle") return CircleQuotient::circle();
  if (text.rfind("rotation:", 0) == 0) {
    const auto k = parse_weights(text.substr(9));
    if (k.size() == 1) return CircleQuotient::rotation(k[0]);
  }
  throw Error(ErrorKind::InvalidInput, "circle quotient must be reflection, circle or rotation:k");
}

CircleMap parse_circle_map(const std::string& text) {
  if (text == "half-fold") return CircleMap::half_fold();
  if (text == "essential-f") return CircleMap::essential_f();
  if (text == "essential-g") return CircleMap::essential_g();
  if (text.rfind("covering:", 0) == 0) {
    const auto k = parse_weights(text.substr(9));
    if (k.size() == 1) return CircleMap::covering_projection(k[0]);
  }
  if (text.rfind("power:", 0) == 0) {
    const auto p = parse_weights(text.substr(6));
    if (p.size() == 1) return CircleMap::power(p[0]);
    if (p.size() == 3) {
      return CircleMap::power(p[0], CircleQuotient::rotation(p[1]), CircleQuotient::rotation(p[2]));
    }
  }
  throw Error(ErrorKind::InvalidInput,
              "circle map must be half-fold, essential-f, essential-g, covering:k, power:m or "
              "power:m,k,b");
}

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotRegular:
    case ErrorKind::CriticalValue:
    case ErrorKind::IrregularPoint: return 3;
    case ErrorKind::NotEquivariant: return 4;
    case ErrorKind::EnumerationCapExceeded: return 5;
    case ErrorKind::NewtonDiverged:
    case ErrorKind::NoConvergence:
    case ErrorKind::NonIntegralWeight: return 1;
    default: return 2;
  }
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

void print_degree_text(const DegreeResult& d) {
  std::cout << "degree " << d.oriented << " (mod2 " << d.mod2 << ", weighted count "
            << d.weighted_count << ") at " << d.value.str() << '\n';
  for (const auto& p : d.preimages) {
    std::cout << "  " << p.point.str() << "  isotropy " << p.isotropy << "  weight " << p.weight
              << "  sign " << (p.sign > 0 ? "+" : "-") << '\n';
  }
}

void print_strata_text(const StrataReport& s) {
  std::cout << "dimension " << s.dim << ", codim1_empty " << std::boolalpha << s.codim1_empty
            << ", orientable " << s.orientable << '\n';
  for (const auto& st : s.strata) {
    for (const auto& c : st.components) {
      std::cout << "  sdim " << st.singular_dim << "  isotropy " << c.isotropy_order << " ";
      for (const auto& d : c.descriptions) std::cout << ' ' << d;
      std::cout << '\n';
    }
  }
}

void print_reports_text(const std::vector<PropertyReport>& reports) {
  std::cout << std::left << std::setw(22) << "property" << std::setw(8) << "cases" << "result\n";
  for (const auto& r : reports) {
    std::cout << std::setw(22) << r.name << std::setw(8) << r.cases
              << (r.passed() ? "PASS" : "FAIL") << '\n';
    for (const auto& f : r.failures) std::cout << "    " << f.input << ": " << f.detail << '\n';
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Degrees of maps between weighted projective spaces and circle quotients"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format, config_path;
  std::uint64_t cap = 0;
  std::uint64_t seed = 0;
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--config", config_path, "JSON file with format/cap/tolerances/seed");
  app.add_option("--cap", cap, "enumeration cap on prod(e) (default 10000000)");

  auto* strata_cmd = app.add_subcommand("strata", "singular strata of an orbifold");
  std::string wps, circle;
  strata_cmd->add_option("--wps", wps, "weights of CP^n(q), e.g. 1,3");
  strata_cmd->add_option("--circle", circle, "reflection | circle | rotation:k");

  MapArgs degree_args, pre_args, arc_args, lift_args;
  std::string degree_value, pre_value;
  auto* degree_cmd = app.add_subcommand("degree", "degree of a monomial map");
  add_map_options(degree_cmd, degree_args);
  degree_cmd->add_option("--value", degree_value, "probe value, e.g. 0,1/3 (default all ones)");

  auto* pre_cmd = app.add_subcommand("preimages", "preimage records of a value");
  add_map_options(pre_cmd, pre_args);
  pre_cmd->add_option("--value", pre_value, "value, e.g. 0,1/3 (default all ones)");

  auto* verify_cmd = app.add_subcommand("verify", "run property suites");
  std::string selector = "all";
  verify_cmd->add_option("suite", selector, "all | counterexample | covering | local-constancy | "
                                            "multiplicativity | numeric | oracle | "
                                            "same-underlying | value-independence");
  verify_cmd->add_option("--seed", seed, "random seed (default 0)");

  auto* arc_cmd = app.add_subcommand("arc", "CSV of counts along a straight arc of values");
  add_map_options(arc_cmd, arc_args);
  std::string from = "-1,1", to = "1,1";
  int samples = 41;
  arc_cmd->add_option("--from", from, "start value as real coordinates (default -1,1)");
  arc_cmd->add_option("--to", to, "end value as real coordinates (default 1,1)");
  arc_cmd->add_option("--samples", samples, "number of samples (default 41)");

  auto* lift_cmd = app.add_subcommand("lift", "slice lift k(y) f(y) near a point");
  add_map_options(lift_cmd, lift_args);
  std::string lift_at;
  double lift_h = 1e-3;
  int lift_dir = 0;
  lift_cmd->add_option("--at", lift_at, "base point as exact coordinates (default all ones)");
  lift_cmd->add_option("--step", lift_h, "perturbation size along a slice direction (default 1e-3)");
  lift_cmd->add_option("--direction", lift_dir, "slice coordinate index (default 0)");

  auto* circle_cmd = app.add_subcommand("circle-degree", "mod-2 degree of a circle quotient map");
  std::string circle_map;
  double angle = 0;
  circle_cmd->add_option("--map", circle_map, "half-fold | essential-f | essential-g | "
                                              "covering:k | power:m | power:m,k,b")
      ->required();
  circle_cmd->add_option("--y", angle, "value as an angle in radians")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    CliConfig cfg;
    if (!config_path.empty()) cfg = config_from_json(parse_json(slurp(config_path)));
    if (const char* env = std::getenv("ORBIDEG_ENUM_CAP")) {
      const auto v = parse_weights(env);
      if (v.size() != 1 || v[0] <= 0) {
        throw Error(ErrorKind::InvalidInput, "ORBIDEG_ENUM_CAP must be a positive integer");
      }
      cfg.cap = static_cast<std::uint64_t>(v[0]);
    }
    if (app.count("--cap")) cfg.cap = cap;
    if (!format.empty()) cfg.format = format;
    if (verify_cmd->count("--seed")) cfg.seed = seed;
    const bool text = cfg.format == "text";

    if (*strata_cmd) {
      if (wps.empty() == circle.empty()) {
        throw Error(ErrorKind::InvalidInput, "give exactly one of --wps or --circle");
      }
      const StrataReport s =
          wps.empty() ? strata(parse_circle(circle)) : strata(WpsOrbifold(parse_weights(wps)));
      text ? print_strata_text(s) : print_json(to_json(s));
    } else if (*degree_cmd || *pre_cmd) {
      const auto& args = *degree_cmd ? degree_args : pre_args;
      const auto& value = *degree_cmd ? degree_value : pre_value;
      const MonomialMap f = build_map(args);
      std::optional<WpsPoint> y;
      if (!value.empty()) y = parse_value(f.target(), value);
      const DegreeResult d = degree(f, y, cfg.enumeration());
      if (*degree_cmd) {
        text ? print_degree_text(d) : print_json(to_json(d));
      } else if (text) {
        print_degree_text(d);
      } else {
        Json a = Json::array();
        for (const auto& r : d.preimages) a.push_back(to_json(r));
        print_json(a);
      }
    } else if (*verify_cmd) {
      const auto reports = run_suite(selector, cfg.seed, cfg.enumeration());
      text ? print_reports_text(reports) : print_json(to_json(reports));
      for (const auto& r : reports) {
        if (!r.passed()) return 1;
      }
    } else if (*arc_cmd) {
      const MonomialMap f = arc_args.q.empty() && arc_args.map.empty()
                                ? MonomialMap::f_type({1, 3})
                                : build_map(arc_args);
      const auto rows = value_arc(f, parse_reals(from), parse_reals(to), samples, cfg.tolerances(),
                                  cfg.enumeration());
      std::cout << "t,value,raw_count,weighted_count,signs_positive,min_singular_value\n";
      std::cout << std::setprecision(10);
      for (const auto& a : rows) {
        std::cout << a.t << ',';
        for (std::size_t j = 0; j < a.value.size(); ++j) {
          std::cout << (j ? ";" : "") << a.value[j].real();
        }
        std::cout << ',' << a.raw_count << ',' << a.weighted_count << ','
                  << (a.signs_positive ? 1 : 0) << ',' << a.min_singular_value << '\n';
      }
    } else if (*lift_cmd) {
      const MonomialMap f = build_map(lift_args);
      const WpsPoint x =
          lift_at.empty() ? WpsPoint::ones(f.source()) : parse_value(f.source(), lift_at);
      const SliceChart source(f.source(), to_sphere(x));
      const SliceChart target(f.target(), monomial_lift(f, source.base()));
      if (lift_dir < 0 || lift_dir >= source.dim()) {
        throw Error(ErrorKind::InvalidInput, "direction index outside the slice");
      }
      RVector s = RVector::Zero(source.dim());
      s(lift_dir) = lift_h;
      const auto ev = slice_lift(f, source, target, s, cfg.tolerances());
      if (text) {
        std::cout << "phase " << ev.phase << ", residual " << ev.residual << ", iterations "
                  << ev.iterations << '\n';
      } else {
        print_json(to_json(ev));
      }
    } else if (*circle_cmd) {
      CircleRootOptions opts;
      opts.derivative_threshold = cfg.derivative_threshold;
      const auto d = circle_degree2(parse_circle_map(circle_map), angle, opts);
      if (text) {
        std::cout << "mod2 " << d.mod2 << ", weighted count " << d.weighted_count
                  << ", oriented " << d.oriented << '\n';
      } else {
        print_json(to_json(d));
      }
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code(e.kind());
  }
  return 0;
}
