#include "orbideg/serialize.hpp"

#include <charconv>
#include <sstream>

#include "orbideg/errors.hpp"

namespace orbideg {

namespace {

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else if (c != ' ' && c != '\t') {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

Json real_vector(const Eigen::VectorXd& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v(i));
  return a;
}

Json complex_vector(const CVector& v) {
  Json a = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(Json::array({v(i).real(), v(i).imag()}));
  return a;
}

template <class T>
T get_checked(const Json& j, const char* key) {
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("bad field '") + key + "': " + e.what());
  }
}

}  // namespace

NumericTolerances CliConfig::tolerances() const {
  NumericTolerances t;
  t.residual = residual;
  t.derivative_threshold = derivative_threshold;
  t.fd_step = fd_step;
  return t;
}

EnumerationConfig CliConfig::enumeration() const {
  EnumerationConfig e;
  e.cap = cap;
  return e;
}

Json to_json(const CliConfig& c) {
  return Json{{"format", c.format},
              {"cap", c.cap},
              {"residual", c.residual},
              {"derivative_threshold", c.derivative_threshold},
              {"fd_step", c.fd_step},
              {"seed", c.seed}};
}

CliConfig config_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidInput, "config must be a JSON object");
  CliConfig c;
  for (const auto& [key, _] : j.items()) {
    if (key == "format") {
      c.format = get_checked<std::string>(j, "format");
      if (c.format != "json" && c.format != "text") {
        throw Error(ErrorKind::InvalidInput, "format must be json or text");
      }
    } else if (key == "cap") {
      c.cap = get_checked<std::uint64_t>(j, "cap");
    } else if (key == "residual") {
      c.residual = get_checked<double>(j, "residual");
    } else if (key == "derivative_threshold") {
      c.derivative_threshold = get_checked<double>(j, "derivative_threshold");
    } else if (key == "fd_step") {
      c.fd_step = get_checked<double>(j, "fd_step");
    } else if (key == "seed") {
      c.seed = get_checked<std::uint64_t>(j, "seed");
    } else {
      throw Error(ErrorKind::InvalidInput, "unknown config key '" + key + "'");
    }
  }
  if (!(c.residual > 0 && c.derivative_threshold > 0 && c.fd_step > 0)) {
    throw Error(ErrorKind::InvalidInput, "tolerances must be positive");
  }
  return c;
}

Weights parse_weights(const std::string& text) {
  Weights w;
  for (const auto& part : split(text, ',')) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), v);
    if (part.empty() || ec != std::errc() || ptr != part.data() + part.size()) {
      throw Error(ErrorKind::InvalidInput, "malformed integer list '" + text + "'");
    }
    w.push_back(v);
  }
  return w;
}

WpsPoint parse_value(const Weights& r, const std::string& text) {
  std::vector<ExactCoordinate> coords;
  for (const auto& part : split(text, ',')) coords.push_back(ExactCoordinate::parse(part));
  return WpsPoint(r, std::move(coords));
}

Json to_json(const WpsPoint& x) {
  Json coords = Json::array();
  for (const auto& c : x.coords()) coords.push_back(c.str());
  return Json{{"weights", x.weights()}, {"coords", coords}, {"text", x.str()}};
}

WpsPoint point_from_json(const Json& j) {
  const auto w = get_checked<Weights>(j, "weights");
  std::vector<ExactCoordinate> coords;
  for (const auto& c : get_checked<std::vector<std::string>>(j, "coords")) {
    coords.push_back(ExactCoordinate::parse(c));
  }
  return WpsPoint(w, std::move(coords));
}

Json to_json(const MonomialMap& f) {
  return Json{{"q", f.source()},
              {"r", f.target()},
              {"e", f.exponents()},
              {"d", f.equivariance_degree()}};
}

MonomialMap map_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::InvalidInput, "map descriptor must be an object");
  return MonomialMap(get_checked<Weights>(j, "q"), get_checked<Weights>(j, "r"),
                     get_checked<std::vector<std::int64_t>>(j, "e"));
}

Json to_json(const PreimageRecord& r) {
  return Json{{"point", to_json(r.point)},
              {"isotropy", r.isotropy},
              {"weight", r.weight},
              {"sign", r.sign}};
}

Json to_json(const DegreeResult& d) {
  Json pre = Json::array();
  for (const auto& r : d.preimages) pre.push_back(to_json(r));
  return Json{{"degree", d.oriented},
              {"mod2", d.mod2},
              {"weighted_count", d.weighted_count},
              {"value", to_json(d.value)},
              {"regular",
               {{"regular", d.certificate.regular},
                {"support", d.certificate.support},
                {"critical_coordinates", d.certificate.critical_coordinates}}},
              {"preimages", pre}};
}

Json to_json(const StrataReport& s) {
  Json strata = Json::array();
  for (const auto& st : s.strata) {
    Json comps = Json::array();
    for (const auto& c : st.components) {
      comps.push_back(Json{{"isotropy", c.isotropy_order},
                           {"supports", c.supports},
                           {"points", c.descriptions}});
    }
    strata.push_back(Json{{"singular_dim", st.singular_dim},
                          {"open_dense", st.open_dense},
                          {"components", comps}});
  }
  return Json{{"dim", s.dim},
              {"codim1_empty", s.codim1_empty},
              {"orientable", s.orientable},
              {"singular_points", s.singular_point_count()},
              {"strata", strata}};
}

Json to_json(const LiftEvaluation& l) {
  return Json{{"input", real_vector(l.input)},
              {"output", complex_vector(l.output)},
              {"output_coords", real_vector(l.output_coords)},
              {"phase", l.phase},
              {"residual", l.residual},
              {"iterations", l.iterations}};
}

Json to_json(const CircleDegree& d) {
  Json pre = Json::array();
  for (const auto& p : d.preimages) {
    pre.push_back(Json{{"angle", p.angle},
                       {"derivative", p.derivative},
                       {"sign", p.sign},
                       {"isotropy", p.isotropy}});
  }
  return Json{{"mod2", d.mod2},
              {"weighted_count", d.weighted_count},
              {"oriented", d.oriented},
              {"target_isotropy", d.target_isotropy},
              {"preimages", pre}};
}

Json to_json(const PropertyReport& r) {
  Json failures = Json::array();
  for (const auto& f : r.failures) failures.push_back(Json{{"input", f.input}, {"detail", f.detail}});
  return Json{{"name", r.name},
              {"statement", r.statement},
              {"cases", r.cases},
              {"passed", r.passed()},
              {"failures", failures}};
}

Json to_json(const std::vector<PropertyReport>& reports) {
  Json a = Json::array();
  for (const auto& r : reports) a.push_back(to_json(r));
  return a;
}

}  // namespace orbideg
