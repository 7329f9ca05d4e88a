#include "aclab/base_spec.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace aclab {

namespace {

Int int_from_json(const nlohmann::json& j, const char* what) {
  if (j.is_number_integer()) return Int(j.get<long long>());
  if (j.is_number_unsigned()) return Int(j.get<unsigned long long>());
  if (j.is_string()) return Int(j.get<std::string>());
  throw std::invalid_argument(std::string("base spec: ") + what + " must be an integer or integer string");
}

nlohmann::json int_to_json(const Int& v) {
  // Small values stay JSON numbers; anything wider goes out as a string.
  static const Int kMax = Int(1) << 53;
  if (v >= -kMax && v <= kMax) return nlohmann::json(static_cast<long long>(v));
  return nlohmann::json(v.str());
}

std::string join_list(const std::vector<Int>& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i > 0) os << ',';
    os << xs[i];
  }
  return os.str();
}

}  // namespace

BaseSpec BaseSpec::explicit_list(std::vector<Int> terms) {
  BaseSpec s;
  s.kind = BaseKind::Explicit;
  s.list = std::move(terms);
  s.validate();
  return s;
}

BaseSpec BaseSpec::uniform(Int value) {
  BaseSpec s;
  s.kind = BaseKind::Uniform;
  s.value = std::move(value);
  s.validate();
  return s;
}

BaseSpec BaseSpec::thm11() {
  BaseSpec s;
  s.kind = BaseKind::Thm11;
  return s;
}

BaseSpec BaseSpec::thm12(std::vector<Int> d, Int c) {
  BaseSpec s;
  s.kind = BaseKind::Thm12;
  s.list = std::move(d);
  s.c = std::move(c);
  s.validate();
  return s;
}

BaseSpec BaseSpec::lemma22(Int a, Int b, unsigned l) {
  BaseSpec s;
  s.kind = BaseKind::Lemma22;
  s.a = std::move(a);
  s.b = std::move(b);
  s.l = l;
  s.validate();
  return s;
}

void BaseSpec::validate() const {
  switch (kind) {
    case BaseKind::Explicit: {
      if (list.empty()) throw std::invalid_argument("explicit base requires a non-empty term list");
      for (std::size_t i = 0; i < list.size(); ++i) {
        if (list[i] < 2) {
          std::ostringstream os;
          os << "base term at index " << (i + 1) << " must be >= 2 (got " << list[i] << ")";
          throw std::invalid_argument(os.str());
        }
      }
      return;
    }
    case BaseKind::Uniform: {
      if (value < 2) {
        std::ostringstream os;
        os << "uniform base requires value >= 2 (got " << value << ")";
        throw std::invalid_argument(os.str());
      }
      return;
    }
    case BaseKind::Thm11:
      return;
    case BaseKind::Thm12: {
      if (list.empty()) throw std::invalid_argument("thm12 requires a non-empty d list");
      for (std::size_t i = 0; i < list.size(); ++i) {
        if (list[i] < 2) {
          std::ostringstream os;
          os << "thm12 d value at index " << (i + 1) << " must be >= 2 (got " << list[i] << ")";
          throw std::invalid_argument(os.str());
        }
      }
      const Int lo = thm12_a();
      const Int hi = thm12_b();
      if (hi < lo + 2) {
        std::ostringstream os;
        os << "thm12 requires letters a, b with b >= a+2 (got a=" << lo << ", b=" << hi << ")";
        throw std::invalid_argument(os.str());
      }
      for (const Int& d : list) {
        if (d != lo && d != hi) {
          std::ostringstream os;
          os << "thm12 d values must all be one of the two letters {" << lo << "," << hi << "} (got " << d << ")";
          throw std::invalid_argument(os.str());
        }
      }
      if (c <= 2 * hi) {
        std::ostringstream os;
        os << "thm12 requires c > 2b (got c=" << c << ", b=" << hi << ")";
        throw std::invalid_argument(os.str());
      }
      return;
    }
    case BaseKind::Lemma22: {
      if (a < 2) {
        std::ostringstream os;
        os << "lemma22 requires a >= 2 (got a=" << a << ")";
        throw std::invalid_argument(os.str());
      }
      if (b < a + 2) {
        std::ostringstream os;
        os << "lemma22 requires b >= a+2 (got a=" << a << ", b=" << b << ")";
        throw std::invalid_argument(os.str());
      }
      if (l == 0 || l % 2 == 0) {
        std::ostringstream os;
        os << "lemma22 requires odd l >= 1 (got l=" << l << ")";
        throw std::invalid_argument(os.str());
      }
      return;
    }
  }
  throw std::invalid_argument("base spec: unknown kind");
}

Int BaseSpec::term_at(std::size_t j) const {
  if (j == 0) return 1;
  switch (kind) {
    case BaseKind::Explicit:
      return list[(j - 1) % list.size()];
    case BaseKind::Uniform:
      return value;
    case BaseKind::Thm11:
      return Int(j + 1);
    case BaseKind::Thm12: {
      // Block m occupies positions (m-1)(m+2)/2 + 1 .. m(m+3)/2 and reads
      // d_m, d_{m-1}, ..., d_1, c. The d-list cycles for indices past its end.
      std::size_t block = 1;
      while (thm12_c_position(block) < j) ++block;
      const std::size_t start = (block - 1) * (block + 2) / 2 + 1;
      const std::size_t offset = j - start;
      if (offset == block) return c;
      const std::size_t d_index = block - offset;  // 1-based into d_1, d_2, ...
      return list[(d_index - 1) % list.size()];
    }
    case BaseKind::Lemma22:
      return ((j - 1) % (static_cast<std::size_t>(l) + 1)) < l ? a : b;
  }
  throw std::logic_error("base spec: unknown kind");
}

Int BaseSpec::thm12_a() const { return *std::min_element(list.begin(), list.end()); }

Int BaseSpec::thm12_b() const { return *std::max_element(list.begin(), list.end()); }

std::string BaseSpec::describe() const {
  std::ostringstream os;
  switch (kind) {
    case BaseKind::Explicit:
      os << "explicit[" << join_list(list) << "]";
      break;
    case BaseKind::Uniform:
      os << "uniform(" << value << ")";
      break;
    case BaseKind::Thm11:
      os << "thm11";
      break;
    case BaseKind::Thm12:
      os << "thm12(d=[" << join_list(list) << "],c=" << c << ")";
      break;
    case BaseKind::Lemma22:
      os << "lemma22(a=" << a << ",b=" << b << ",l=" << l << ")";
      break;
  }
  return os.str();
}

nlohmann::json BaseSpec::to_json() const {
  nlohmann::json j;
  switch (kind) {
    case BaseKind::Explicit: {
      j["kind"] = "explicit";
      nlohmann::json arr = nlohmann::json::array();
      for (const Int& t : list) arr.push_back(int_to_json(t));
      j["b"] = arr;
      break;
    }
    case BaseKind::Uniform:
      j["kind"] = "uniform";
      j["value"] = int_to_json(value);
      break;
    case BaseKind::Thm11:
      j["kind"] = "thm11";
      break;
    case BaseKind::Thm12: {
      j["kind"] = "thm12";
      nlohmann::json arr = nlohmann::json::array();
      for (const Int& t : list) arr.push_back(int_to_json(t));
      j["d"] = arr;
      j["c"] = int_to_json(c);
      break;
    }
    case BaseKind::Lemma22:
      j["kind"] = "lemma22";
      j["a"] = int_to_json(a);
      j["b"] = int_to_json(b);
      j["l"] = l;
      break;
  }
  return j;
}

BaseSpec BaseSpec::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
    throw std::invalid_argument("base spec JSON must be an object with a \"kind\" string");
  }
  const std::string kind = j["kind"].get<std::string>();
  if (kind == "explicit") {
    if (!j.contains("b") || !j["b"].is_array()) throw std::invalid_argument("explicit base spec requires array \"b\"");
    std::vector<Int> terms;
    for (const auto& t : j["b"]) terms.push_back(int_from_json(t, "b[]"));
    return explicit_list(std::move(terms));
  }
  if (kind == "uniform") {
    if (!j.contains("value")) throw std::invalid_argument("uniform base spec requires \"value\"");
    return uniform(int_from_json(j["value"], "value"));
  }
  if (kind == "thm11") return thm11();
  if (kind == "thm12") {
    if (!j.contains("d") || !j["d"].is_array()) throw std::invalid_argument("thm12 base spec requires array \"d\"");
    if (!j.contains("c")) throw std::invalid_argument("thm12 base spec requires \"c\"");
    std::vector<Int> d;
    for (const auto& t : j["d"]) d.push_back(int_from_json(t, "d[]"));
    return thm12(std::move(d), int_from_json(j["c"], "c"));
  }
  if (kind == "lemma22") {
    if (!j.contains("a") || !j.contains("b") || !j.contains("l")) {
      throw std::invalid_argument("lemma22 base spec requires \"a\", \"b\", \"l\"");
    }
    const Int l = int_from_json(j["l"], "l");
    if (l < 0 || l > 1000000) throw std::invalid_argument("lemma22 l out of range");
    return lemma22(int_from_json(j["a"], "a"), int_from_json(j["b"], "b"), static_cast<unsigned>(l));
  }
  throw std::invalid_argument("base spec JSON: unknown kind \"" + kind + "\"");
}

std::size_t thm12_c_position(std::size_t block) { return block * (block + 3) / 2; }

bool thm12_is_c_position(std::size_t j) {
  if (j == 0) return false;
  std::size_t block = 1;
  while (thm12_c_position(block) < j) ++block;
  return thm12_c_position(block) == j;
}

}  // namespace aclab
