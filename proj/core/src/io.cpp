#include "hopf_forge/io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "hopf_forge/errors.hpp"
#include "json_scalar.hpp"

namespace hopf_forge {

namespace detail {

namespace {

Integer integer_from_json(const nlohmann::json& j, const std::string& where) {
  if (j.is_number_integer()) {
    return j.is_number_unsigned() ? Integer(std::to_string(j.get<std::uint64_t>()))
                                  : Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    Integer out;
    const auto& s = j.get_ref<const std::string&>();
    if (s.empty() || out.set_str(s, 10) != 0) {
      throw Error(Errc::ParseError, where + ": \"" + s + "\" is not an integer");
    }
    return out;
  }
  throw Error(Errc::ParseError, where + ": expected an integer");
}

nlohmann::ordered_json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return z.get_si();
  return z.get_str();
}

}  // namespace

CycNumber scalar_from_json(const nlohmann::json& j, int order, const std::string& where) {
  if (!j.is_object()) return CycNumber(order, Rational(integer_from_json(j, where)));
  std::set<std::string> keys;
  for (const auto& [key, value] : j.items()) keys.insert(key);
  if (keys != std::set<std::string>{"den", "num"}) {
    throw Error(Errc::ParseError, where + ": scalar object needs exactly \"num\" and \"den\"");
  }
  const auto& num = j.at("num");
  if (!num.is_array()) throw Error(Errc::ParseError, where + ": \"num\" must be an array");
  const int degree = CyclotomicField::get(order).degree();
  if (static_cast<int>(num.size()) != degree) {
    throw Error(Errc::ParseError, where + ": \"num\" needs " + std::to_string(degree) +
                                      " entries for order " + std::to_string(order));
  }
  std::vector<Integer> coeffs;
  for (const auto& c : num) coeffs.push_back(integer_from_json(c, where));
  Integer den = integer_from_json(j.at("den"), where);
  if (den == 0) throw Error(Errc::ParseError, where + ": zero denominator");
  return CycNumber::from_integers(order, std::move(coeffs), std::move(den));
}

nlohmann::ordered_json scalar_to_json(const CycNumber& x) {
  if (x.is_rational() && x.denominator() == 1) return integer_to_json(x.numerators()[0]);
  nlohmann::ordered_json num = nlohmann::ordered_json::array();
  for (const auto& a : x.numerators()) num.push_back(integer_to_json(a));
  nlohmann::ordered_json out;
  out["num"] = std::move(num);
  out["den"] = integer_to_json(x.denominator());
  return out;
}

std::string scalar_text(const CycNumber& x) { return scalar_to_json(x).dump(); }

}  // namespace detail

namespace {

using nlohmann::json;

const json& field(const json& doc, const char* key) {
  auto it = doc.find(key);
  if (it == doc.end()) throw Error(Errc::ParseError, std::string("missing \"") + key + "\"");
  return *it;
}

std::size_t index_from_json(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<std::int64_t>() < 0) {
    throw Error(Errc::ParseError, where + ": expected a non-negative integer index");
  }
  return j.get<std::size_t>();
}

std::vector<StructureEntry> entries_from_json(const json& j, int order, const char* what) {
  if (!j.is_array()) throw Error(Errc::ParseError, std::string(what) + " must be an array");
  std::vector<StructureEntry> out;
  out.reserve(j.size());
  for (std::size_t e = 0; e < j.size(); ++e) {
    const std::string where = std::string(what) + "[" + std::to_string(e) + "]";
    const auto& row = j[e];
    if (!row.is_array() || row.size() != 4) {
      throw Error(Errc::ParseError, where + " must be [i, j, k, scalar]");
    }
    out.push_back({index_from_json(row[0], where), index_from_json(row[1], where),
                   index_from_json(row[2], where),
                   detail::scalar_from_json(row[3], order, where)});
  }
  return out;
}

Vec vec_from_json(const json& j, int order, const std::string& what) {
  if (!j.is_array()) throw Error(Errc::ParseError, what + " must be an array");
  Vec out;
  out.reserve(j.size());
  for (std::size_t e = 0; e < j.size(); ++e) {
    out.push_back(detail::scalar_from_json(j[e], order, what + "[" + std::to_string(e) + "]"));
  }
  return out;
}

std::string entries_text(const std::vector<StructureEntry>& entries) {
  if (entries.empty()) return "[]";
  std::string out = "[\n";
  for (std::size_t e = 0; e < entries.size(); ++e) {
    const auto& x = entries[e];
    out += "    [" + std::to_string(x.i) + ", " + std::to_string(x.j) + ", " +
           std::to_string(x.k) + ", " + detail::scalar_text(x.value) + "]";
    out += e + 1 < entries.size() ? ",\n" : "\n";
  }
  return out + "  ]";
}

std::string vec_text(const Vec& v) {
  std::string out = "[";
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (t > 0) out += ", ";
    out += detail::scalar_text(v[t]);
  }
  return out + "]";
}

}  // namespace

HopfPresentation parse_hopf_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::ParseError, e.what());
  }
  if (!doc.is_object()) throw Error(Errc::ParseError, "top level must be an object");
  static const std::set<std::string> known{"name",  "dim",    "cyclotomic_order", "basis", "mult",
                                           "comult", "unit", "counit", "antipode"};
  for (const auto& [key, value] : doc.items()) {
    if (!known.contains(key)) throw Error(Errc::ParseError, "unknown key \"" + key + "\"");
  }
  try {
    const std::string name = field(doc, "name").get<std::string>();
    const std::size_t dim = index_from_json(field(doc, "dim"), "dim");
    const auto& order_json = field(doc, "cyclotomic_order");
    if (!order_json.is_number_integer()) {
      throw Error(Errc::ParseError, "cyclotomic_order must be an integer");
    }
    const auto order64 = order_json.get<std::int64_t>();
    if (order64 < 1 || order64 > kMaxCyclotomicOrder) {
      throw Error(Errc::ParseError,
                  "cyclotomic_order must lie in [1, " + std::to_string(kMaxCyclotomicOrder) + "]");
    }
    const int order = static_cast<int>(order64);
    const auto basis = field(doc, "basis").get<std::vector<std::string>>();
    if (basis.size() != dim) {
      throw Error(Errc::ParseError, "basis has " + std::to_string(basis.size()) +
                                        " labels but dim is " + std::to_string(dim));
    }
    auto mult = entries_from_json(field(doc, "mult"), order, "mult");
    auto comult = entries_from_json(field(doc, "comult"), order, "comult");
    Vec unit = vec_from_json(field(doc, "unit"), order, "unit");
    Vec counit = vec_from_json(field(doc, "counit"), order, "counit");
    std::optional<Mat> antipode;
    if (auto it = doc.find("antipode"); it != doc.end()) {
      if (!it->is_array() || it->size() != dim) {
        throw Error(Errc::ParseError, "antipode needs " + std::to_string(dim) + " rows");
      }
      std::vector<Vec> images;
      for (std::size_t c = 0; c < dim; ++c) {
        images.push_back(vec_from_json((*it)[c], order, "antipode[" + std::to_string(c) + "]"));
        if (images.back().size() != dim) {
          throw Error(Errc::ParseError, "antipode row " + std::to_string(c) + " has wrong length");
        }
      }
      antipode = Mat::from_columns(images, dim, order);
    }
    return HopfPresentation(name, order, basis, std::move(mult), std::move(comult),
                            std::move(unit), std::move(counit), std::move(antipode));
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

HopfPresentation load_hopf_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_hopf_json(buffer.str());
}

std::string serialize_hopf_json(const HopfPresentation& h) {
  std::string out = "{\n";
  out += "  \"name\": " + json(h.name()).dump() + ",\n";
  out += "  \"dim\": " + std::to_string(h.dim()) + ",\n";
  out += "  \"cyclotomic_order\": " + std::to_string(h.order()) + ",\n";
  out += "  \"basis\": " + json(h.basis()).dump(-1, ' ', false) + ",\n";
  out += "  \"mult\": " + entries_text(h.mult()) + ",\n";
  out += "  \"comult\": " + entries_text(h.comult()) + ",\n";
  out += "  \"unit\": " + vec_text(h.unit()) + ",\n";
  out += "  \"counit\": " + vec_text(h.counit());
  if (h.has_antipode()) {
    out += ",\n  \"antipode\": [\n";
    for (std::size_t c = 0; c < h.dim(); ++c) {
      out += "    " + vec_text(h.antipode().column(c));
      out += c + 1 < h.dim() ? ",\n" : "\n";
    }
    out += "  ]";
  }
  return out + "\n}\n";
}

void save_hopf_file(const HopfPresentation& h, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::ParseError, "cannot write " + path.string());
  out << serialize_hopf_json(h);
}

std::string format_scalar(const CycNumber& x) { return detail::scalar_text(x); }

CycNumber parse_scalar(std::string_view json_text, int order) {
  try {
    return detail::scalar_from_json(json::parse(json_text), order, "scalar");
  } catch (const json::exception& e) {
    throw Error(Errc::ParseError, e.what());
  }
}

}  // namespace hopf_forge
