#include "bracekit/cli/spec.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <variant>

#include <openssl/evp.h>

#include "bracekit/presets.hpp"

namespace bracekit::cli {

namespace {

using Arg = std::variant<std::size_t, FiniteGroup>;

class PresetParser {
 public:
  explicit PresetParser(const std::string& s) : s_(s) {}

  FiniteGroup parse() {
    FiniteGroup g = group();
    skip();
    if (pos_ != s_.size()) fail("trailing characters");
    return g;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InputError("bad preset '" + s_ + "': " + why + " at offset " +
                     std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Arg arg() {
    skip();
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        v = v * 10 + std::size_t(s_[pos_++] - '0');
        if (v > 1'000'000) fail("number too large");
      }
      return v;
    }
    return group();
  }

  FiniteGroup group() {
    skip();
    std::string name;
    while (pos_ < s_.size() &&
           (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
      name += char(std::tolower(static_cast<unsigned char>(s_[pos_++])));
    if (name.empty()) fail("expected a preset name");
    std::vector<Arg> args;
    if (eat('(')) {
      if (!eat(')')) {
        do args.push_back(arg());
        while (eat(','));
        if (!eat(')')) fail("expected ')'");
      }
    }
    return build(name, args);
  }

  std::size_t num(const std::vector<Arg>& args, std::size_t i) const {
    if (i >= args.size() || !std::holds_alternative<std::size_t>(args[i]))
      throw InputError("preset '" + s_ + "': expected an integer argument");
    return std::get<std::size_t>(args[i]);
  }

  FiniteGroup build(const std::string& name, const std::vector<Arg>& args) {
    auto arity = [&](std::size_t k) {
      if (args.size() != k)
        throw InputError("preset " + name + " takes " + std::to_string(k) +
                         " argument(s)");
    };
    if (name == "paper_7_3") {
      arity(0);
      return presets::paper_7_3();
    }
    if (name == "quaternion8" || name == "q8") {
      arity(0);
      return presets::quaternion8();
    }
    if (name == "sl2_3") {
      arity(0);
      return presets::sl2_3();
    }
    if (name == "trivial") {
      arity(0);
      return FiniteGroup();
    }
    if (name == "cyclic") {
      arity(1);
      return presets::cyclic(num(args, 0));
    }
    if (name == "dihedral") {
      arity(1);
      return presets::dihedral(num(args, 0));
    }
    if (name == "heisenberg") {
      arity(1);
      return presets::heisenberg(unsigned(num(args, 0)));
    }
    if (name == "sym") {
      arity(1);
      return presets::symmetric(unsigned(num(args, 0)));
    }
    if (name == "alt") {
      arity(1);
      return presets::alternating(unsigned(num(args, 0)));
    }
    if (name == "semidirect") {
      arity(3);
      return presets::semidirect_cyclic(unsigned(num(args, 0)),
                                        unsigned(num(args, 1)),
                                        unsigned(num(args, 2)));
    }
    if (name == "abelian") {
      if (args.empty()) throw InputError("abelian() needs at least one modulus");
      std::vector<std::size_t> moduli;
      for (std::size_t i = 0; i < args.size(); ++i) moduli.push_back(num(args, i));
      return presets::abelian(moduli);
    }
    if (name == "direct") {
      if (args.empty()) throw InputError("direct() needs at least one factor");
      FiniteGroup out;
      bool first = true;
      for (const Arg& a : args) {
        if (!std::holds_alternative<FiniteGroup>(a))
          throw InputError("direct() factors must be groups");
        const FiniteGroup& f = std::get<FiniteGroup>(a);
        if (out.order() * f.order() > kMaxGroupOrder)
          throw InputError("direct product exceeds the order cap");
        out = first ? f : direct_product(out, f);
        first = false;
      }
      return out;
    }
    throw InputError("unknown preset '" + name + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

std::vector<Elem> read_table(const json& t, std::size_t& n, const char* what) {
  if (!t.is_array() || t.empty())
    throw InputError(std::string(what) + " must be a non-empty array");
  std::vector<Elem> out;
  auto push = [&](const json& v) {
    if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
      throw InputError(std::string(what) + " entries must be non-negative integers");
    out.push_back(v.get<Elem>());
  };
  if (t[0].is_array()) {
    n = t.size();
    for (const json& row : t) {
      if (!row.is_array() || row.size() != n)
        throw InputError(std::string(what) + " must be square");
      for (const json& v : row) push(v);
    }
  } else {
    std::size_t side = std::size_t(std::llround(std::sqrt(double(t.size()))));
    if (side * side != t.size())
      throw InputError(std::string(what) + " length is not a perfect square");
    n = side;
    for (const json& v : t) push(v);
  }
  return out;
}

std::vector<std::string> read_labels(const json& doc, std::size_t n) {
  if (!doc.contains("labels")) return {};
  const json& l = doc.at("labels");
  if (!l.is_array() || l.size() != n)
    throw InputError("labels must be an array with one entry per element");
  std::vector<std::string> out;
  for (const json& v : l) {
    if (!v.is_string()) throw InputError("labels must be strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

FiniteGroup validate(const FiniteGroup& g, std::size_t max_order) {
  if (g.order() > max_order)
    throw InputError("group order " + std::to_string(g.order()) +
                     " exceeds the order cap " + std::to_string(max_order));
  return FiniteGroup::from_table(
      std::vector<Elem>(g.table().begin(), g.table().end()),
      std::vector<std::string>(g.labels().begin(), g.labels().end()), max_order);
}

FiniteGroup resolve_raw(const json& spec, std::size_t max_order);

FiniteGroup resolve_semidirect(const json& s, std::size_t max_order) {
  if (!s.is_object() || !s.contains("normal") || !s.contains("acting"))
    throw InputError("semidirect spec needs 'normal' and 'acting'");
  FiniteGroup n = resolve_raw(s.at("normal"), max_order);
  FiniteGroup h = resolve_raw(s.at("acting"), max_order);
  std::vector<GroupMap> action;
  if (s.contains("action")) {
    const json& a = s.at("action");
    if (!a.is_array() || a.size() != h.order())
      throw InputError("semidirect action needs one image list per acting element");
    for (const json& row : a) {
      if (!row.is_array() || row.size() != n.order())
        throw InputError("semidirect action image list has the wrong length");
      std::vector<Elem> im;
      for (const json& v : row) {
        Elem x = v.get<Elem>();
        if (x >= n.order()) throw InputError("semidirect action image out of range");
        im.push_back(x);
      }
      action.emplace_back(n, n, std::move(im));
    }
  } else if (s.contains("exponent")) {
    // Element h acts by x -> x^(e^h); meaningful for a cyclic acting group
    // indexed by exponent of its generator.
    std::int64_t e = s.at("exponent").get<std::int64_t>();
    std::int64_t k = 1;
    for (Elem x = 0; x < h.order(); ++x) {
      std::vector<Elem> im(n.order());
      for (Elem a = 0; a < n.order(); ++a) im[a] = power(n, a, k);
      action.emplace_back(n, n, std::move(im));
      k = (k * e) % std::int64_t(n.order());
    }
  } else {
    throw InputError("semidirect spec needs 'action' or 'exponent'");
  }
  if (n.order() * h.order() > max_order)
    throw InputError("semidirect product exceeds the order cap");
  try {
    return semidirect_product(n, h, action);
  } catch (const PreconditionError& e) {
    throw InputError(e.what());
  }
}

FiniteGroup resolve_raw(const json& spec, std::size_t max_order) {
  if (spec.is_string()) return parse_preset(spec.get<std::string>());
  if (!spec.is_object()) throw InputError("group spec must be a string or object");
  if (spec.contains("type") && spec.at("type") == "brace")
    return brace_from_json(spec, max_order).multiplicative();
  if (spec.contains("preset")) return parse_preset(spec.at("preset").get<std::string>());
  if (spec.contains("cayley")) {
    std::size_t n = 0;
    auto table = read_table(spec.at("cayley"), n, "cayley table");
    if (n > max_order)
      throw InputError("group order " + std::to_string(n) +
                       " exceeds the order cap " + std::to_string(max_order));
    return FiniteGroup::from_table(std::move(table), read_labels(spec, n), max_order);
  }
  if (spec.contains("permutation")) {
    const json& p = spec.at("permutation");
    unsigned degree = p.at("degree").get<unsigned>();
    auto gens = p.at("generators").get<std::vector<std::vector<unsigned>>>();
    return presets::permutation_group(degree, gens, max_order);
  }
  if (spec.contains("semidirect")) return resolve_semidirect(spec.at("semidirect"), max_order);
  if (spec.contains("direct")) {
    const json& fs = spec.at("direct");
    if (!fs.is_array() || fs.empty()) throw InputError("direct needs a list of factors");
    FiniteGroup out = resolve_raw(fs[0], max_order);
    for (std::size_t i = 1; i < fs.size(); ++i) {
      FiniteGroup f = resolve_raw(fs[i], max_order);
      if (out.order() * f.order() > max_order)
        throw InputError("direct product exceeds the order cap");
      out = direct_product(out, f);
    }
    return out;
  }
  throw InputError("unrecognised group spec");
}

json flat(std::span<const Elem> t) { return json(std::vector<Elem>(t.begin(), t.end())); }

}  // namespace

FiniteGroup parse_preset(const std::string& expr) { return PresetParser(expr).parse(); }

FiniteGroup resolve(const json& spec, std::size_t max_order) {
  try {
    return validate(resolve_raw(spec, max_order), max_order);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed group spec: ") + e.what());
  }
}

json group_to_json(const FiniteGroup& g) {
  json j{{"type", "group"}, {"order", g.order()}, {"cayley", flat(g.table())}};
  if (g.has_labels()) j["labels"] = std::vector<std::string>(g.labels().begin(), g.labels().end());
  return j;
}

json brace_to_json(const Brace& b) {
  json j{{"type", "brace"},
         {"kind", to_string(b.kind())},
         {"order", b.order()},
         {"add", flat(b.additive().table())},
         {"mul", flat(b.multiplicative().table())}};
  if (b.multiplicative().has_labels()) {
    auto l = b.multiplicative().labels();
    j["labels"] = std::vector<std::string>(l.begin(), l.end());
  }
  return j;
}

Brace brace_from_json(const json& doc, std::size_t max_order) {
  try {
    if (document_type(doc) != "brace") throw InputError("not a brace document");
    std::size_t na = 0, nm = 0;
    auto add = read_table(doc.at("add"), na, "add table");
    auto mul = read_table(doc.at("mul"), nm, "mul table");
    if (na != nm) throw InputError("add and mul tables differ in order");
    if (na > max_order)
      throw InputError("brace order " + std::to_string(na) +
                       " exceeds the order cap " + std::to_string(max_order));
    if (doc.contains("order") && doc.at("order").get<std::size_t>() != na)
      throw InputError("brace 'order' does not match its tables");
    for (Elem v : add)
      if (v >= na) throw InputError("add table entry out of range");
    for (Elem v : mul)
      if (v >= na) throw InputError("mul table entry out of range");
    auto labels = read_labels(doc, na);
    BraceKind kind = brace_kind_from_string(doc.value("kind", std::string("left")));
    return Brace(FiniteGroup::unchecked(std::move(add), labels),
                 FiniteGroup::unchecked(std::move(mul), labels), kind);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed brace document: ") + e.what());
  }
}

json solution_to_json(const SetSolution& s) {
  json j{{"type", "solution"},
         {"size", s.size},
         {"sigma", s.sigma},
         {"gamma", s.gamma}};
  if (!s.labels.empty()) j["labels"] = s.labels;
  return j;
}

SetSolution solution_from_json(const json& doc, std::size_t max_order) {
  try {
    if (document_type(doc) != "solution") throw InputError("not a solution document");
    std::size_t ns = 0, ng = 0;
    auto sigma = read_table(doc.at("sigma"), ns, "sigma table");
    auto gamma = read_table(doc.at("gamma"), ng, "gamma table");
    if (ns != ng) throw InputError("sigma and gamma tables differ in size");
    if (ns > max_order)
      throw InputError("solution size exceeds the order cap " + std::to_string(max_order));
    if (doc.contains("size") && doc.at("size").get<std::size_t>() != ns)
      throw InputError("solution 'size' does not match its tables");
    return make_solution(ns, std::move(sigma), std::move(gamma), read_labels(doc, ns));
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed solution document: ") + e.what());
  }
}

std::string document_type(const json& doc) {
  if (doc.is_object() && doc.contains("type") && doc.at("type").is_string()) {
    std::string t = doc.at("type").get<std::string>();
    if (t == "brace" || t == "solution") return t;
  }
  return "group";
}

std::string fingerprint(std::size_t n, std::span<const Elem> table) {
  std::vector<unsigned char> bytes;
  bytes.reserve(4 * (table.size() + 1));
  auto put = [&](std::uint32_t v) {
    for (int i = 0; i < 4; ++i) bytes.push_back(static_cast<unsigned char>(v >> (8 * i)));
  };
  put(std::uint32_t(n));
  for (Elem v : table) put(v);
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (!EVP_Digest(bytes.data(), bytes.size(), digest, &len, EVP_sha256(), nullptr))
    throw Error("sha256 digest failed");
  std::string hex;
  char buf[3];
  for (unsigned i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

}  // namespace bracekit::cli
