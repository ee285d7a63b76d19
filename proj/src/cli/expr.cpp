#include "bracekit/cli/expr.hpp"

#include <algorithm>
#include <cctype>

namespace bracekit::cli {

namespace {

const std::string kCirc = "\xe2\x88\x98";  // U+2218

class Evaluator {
 public:
  Evaluator(const Brace& b, const std::string& s) : b_(b), s_(s) {
    for (Elem a = 0; a < b.order(); ++a) labels_.emplace_back(b.label(a), a);
    std::stable_sort(labels_.begin(), labels_.end(), [](auto& x, auto& y) {
      return x.first.size() > y.first.size();
    });
  }

  Elem run() {
    Elem v = sum();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + s_.substr(pos_, 1) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InputError("cannot evaluate '" + s_ + "': " + why + " at offset " +
                     std::to_string(pos_));
  }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  bool at_end() {
    skip();
    return pos_ >= s_.size();
  }
  bool peek_is(const std::string& tok) {
    skip();
    return s_.compare(pos_, tok.size(), tok) == 0;
  }

  bool label_here() const {
    for (const auto& [label, a] : labels_)
      if (!label.empty() && s_.compare(pos_, label.size(), label) == 0) return true;
    return false;
  }

  Elem sum() {
    bool negate = false;
    if (peek_is("-") && !label_here()) {
      ++pos_;
      negate = true;
    }
    Elem v = product();
    if (negate) v = b_.neg(v);
    while (!at_end()) {
      if (peek_is("+")) {
        ++pos_;
        v = b_.add(v, product());
      } else if (peek_is("-")) {
        ++pos_;
        v = b_.sub(v, product());
      } else {
        break;
      }
    }
    return v;
  }

  bool starts_atom() {
    if (at_end()) return false;
    char c = s_[pos_];
    return c != '+' && c != '-' && c != ')' && c != '*' && !peek_is(kCirc);
  }

  Elem product() {
    Elem v = atom();
    while (!at_end()) {
      if (peek_is("*")) {
        ++pos_;
        v = b_.mul(v, atom());
      } else if (peek_is(kCirc)) {
        pos_ += kCirc.size();
        v = b_.mul(v, atom());
      } else if (starts_atom()) {
        v = b_.mul(v, atom());
      } else {
        break;
      }
    }
    return v;
  }

  Elem atom() {
    skip();
    if (pos_ >= s_.size()) fail("expected an element");
    for (const auto& [label, a] : labels_)
      if (!label.empty() && s_.compare(pos_, label.size(), label) == 0) {
        pos_ += label.size();
        return a;
      }
    if (s_[pos_] == '#') {
      ++pos_;
      std::size_t start = pos_;
      std::size_t v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        v = std::min<std::size_t>(v * 10 + std::size_t(s_[pos_++] - '0'), b_.order());
      if (pos_ == start) fail("expected an index after '#'");
      if (v >= b_.order()) fail("index out of range");
      return Elem(v);
    }
    if (s_[pos_] == '(') {
      ++pos_;
      Elem v = sum();
      skip();
      if (pos_ >= s_.size() || s_[pos_] != ')') fail("expected ')'");
      ++pos_;
      return v;
    }
    fail("unknown element");
  }

  const Brace& b_;
  const std::string& s_;
  std::size_t pos_ = 0;
  std::vector<std::pair<std::string, Elem>> labels_;
};

}  // namespace

Elem evaluate(const Brace& b, const std::string& expr) {
  return Evaluator(b, expr).run();
}

}  // namespace bracekit::cli
