#include "sdcyc/descriptor.hpp"

#include <sstream>

namespace sdcyc {

namespace {

int get_int(const Json& j, const char* key, int fallback) {
  if (!j.contains(key)) return fallback;
  if (!j.at(key).is_number_integer()) fail(ErrorKind::InvalidArgument, std::string("'") + key + "' must be an integer");
  return j.at(key).get<int>();
}

int require_int(const Json& j, const char* key) {
  if (!j.contains(key)) fail(ErrorKind::InvalidArgument, std::string("missing '") + key + "'");
  return get_int(j, key, 0);
}

}  // namespace

std::string modulus_to_hex(std::uint64_t modulus) {
  std::ostringstream os;
  os << "0x" << std::hex << modulus;
  return os.str();
}

std::uint64_t modulus_from_hex(const std::string& hex) {
  std::string s = hex;
  if (s.rfind("0x", 0) == 0 || s.rfind("0X", 0) == 0) s = s.substr(2);
  if (s.empty() || s.size() > 16 || s.find_first_not_of("0123456789abcdefABCDEF") != std::string::npos) {
    fail(ErrorKind::InvalidArgument, "bad modulus '" + hex + "'");
  }
  return std::stoull(s, nullptr, 16);
}

Json label_to_json(const IdealLabel& L, unsigned m) {
  Json omega = Json::array();
  for (std::uint64_t a : L.omega) omega.push_back(poly_to_hex(unpack(a, m), m));
  return Json{{"j", L.j + 1}, {"shape", shape_name(L.shape)}, {"i", L.i}, {"t", L.t}, {"s", L.s}, {"omega", omega}};
}

IdealLabel label_from_json(const Json& j, unsigned m) {
  if (!j.is_object()) fail(ErrorKind::InvalidArgument, "component must be an object");
  IdealLabel L;
  L.j = require_int(j, "j") - 1;
  if (!j.contains("shape") || !j.at("shape").is_string()) fail(ErrorKind::InvalidArgument, "missing 'shape'");
  L.shape = shape_from_name(j.at("shape").get<std::string>());
  L.i = get_int(j, "i", 0);
  L.t = get_int(j, "t", 0);
  L.s = get_int(j, "s", 0);
  if (j.contains("omega")) {
    if (!j.at("omega").is_array()) fail(ErrorKind::InvalidArgument, "'omega' must be an array");
    for (const Json& h : j.at("omega")) {
      if (!h.is_string()) fail(ErrorKind::InvalidArgument, "omega coefficients are hex strings");
      const Poly p = poly_from_hex(h.get<std::string>(), m);
      if (static_cast<unsigned>(p.degree() + 1) * m > 64) fail(ErrorKind::TooLarge, "omega coefficient too wide");
      L.omega.push_back(pack(p, m));
    }
  }
  return L;
}

Json code_to_json(const CyclicCode& code) {
  Json comps = Json::array();
  for (const IdealLabel& L : code.components) comps.push_back(label_to_json(L, code.m));
  return Json{{"n", code.n}, {"m", code.m}, {"k", code.k}, {"modulus", modulus_to_hex(code.modulus)}, {"components", comps}};
}

CyclicCode code_from_json(const Json& j) {
  if (!j.is_object()) fail(ErrorKind::InvalidArgument, "code descriptor must be a JSON object");
  CyclicCode c;
  c.n = require_int(j, "n");
  const int m = require_int(j, "m");
  if (m < 1 || m > static_cast<int>(FieldCtx::kMaxM)) fail(ErrorKind::OutOfRange, "m out of range");
  c.m = static_cast<unsigned>(m);
  c.k = require_int(j, "k");
  c.modulus = j.contains("modulus") ? modulus_from_hex(j.at("modulus").get<std::string>()) : FieldCtx::default_modulus(c.m);
  if (!j.contains("components") || !j.at("components").is_array()) fail(ErrorKind::InvalidArgument, "missing 'components'");
  for (const Json& comp : j.at("components")) c.components.push_back(label_from_json(comp, c.m));
  return c;
}

CyclicCode code_from_string(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(ErrorKind::InvalidArgument, std::string("bad JSON: ") + e.what());
  }
  return code_from_json(j);
}

Json factor_to_json(const Instance& inst) {
  const FactorData& fd = inst.fd;
  const unsigned m = inst.m();
  Json factors = Json::array();
  for (int j = 0; j < fd.r(); ++j) {
    Json coset = Json::array();
    for (auto c : fd.cosets.at(static_cast<std::size_t>(j))) coset.push_back(c);
    factors.push_back(Json{{"j", j + 1},
                           {"poly", poly_to_hex(fd.factor(j), m)},
                           {"text", poly_to_string(fd.factor(j))},
                           {"degree", fd.degree(j)},
                           {"coset", coset},
                           {"rho", fd.rho(j) + 1},
                           {"delta", fd.delta.at(static_cast<std::size_t>(j))},
                           {"self_reciprocal", fd.self_reciprocal(j)},
                           {"idempotent", poly_to_hex(inst.idem.eps.at(static_cast<std::size_t>(j)), m)}});
  }
  return Json{{"n", fd.n},
              {"m", m},
              {"modulus", modulus_to_hex(inst.field.modulus())},
              {"r", fd.r()},
              {"lambda", fd.lambda},
              {"epsilon", fd.epsilon},
              {"factors", factors}};
}

Json matrix_to_json(const FqMatrix& g, unsigned m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < g.rows; ++i) rows.push_back(poly_to_hex(Poly(g.row(i)), m));
  return Json{{"rows", g.rows}, {"cols", g.cols}, {"data", rows}};
}

std::string matrix_to_grid(const FqMatrix& g) {
  std::ostringstream os;
  for (std::size_t i = 0; i < g.rows; ++i) {
    for (std::size_t c = 0; c < g.cols; ++c) {
      if (c) os << ' ';
      os << g.at(i, c);
    }
    os << '\n';
  }
  return os.str();
}

Json weights_to_json(const WeightDist& wd) {
  Json dist = Json::object();
  for (std::size_t w = 0; w < wd.counts.size(); ++w)
    if (wd.counts[w]) dist[std::to_string(w)] = wd.counts[w];
  return dist;
}

}  // namespace sdcyc
