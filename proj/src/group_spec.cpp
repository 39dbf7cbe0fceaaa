#include "mckay/group_spec.hpp"

#include <cctype>
#include <charconv>

#include "mckay/error.hpp"
#include "mckay/prime_field.hpp"

namespace mckay {

GroupSpecPtr make_spec(GroupSpec spec) { return std::make_shared<const GroupSpec>(std::move(spec)); }

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GroupSpecPtr parse_all() {
    auto spec = parse_spec();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::ParseError, "'" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " + why);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a group name");
    return std::string(text_.substr(start, pos_ - start));
  }

  int integer() {
    skip_space();
    int value = 0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr == begin) fail("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - begin);
    return value;
  }

  int argument(int min) {
    expect(':');
    const int v = integer();
    if (v < min) fail("argument must be at least " + std::to_string(min));
    if (v > 1000000) fail("argument too large");
    return v;
  }

  int prime_argument() {
    const int p = argument(2);
    if (!is_prime(p)) fail(std::to_string(p) + " is not prime");
    return p;
  }

  GroupSpecPtr parse_spec() {
    const std::string name = identifier();
    if (name == "cyclic") return make_spec({CyclicSpec{argument(1)}});
    if (name == "dihedral") return make_spec({DihedralSpec{argument(2)}});
    if (name == "bindihedral") return make_spec({BinaryDihedralSpec{argument(2)}});
    if (name == "binary") {
      expect(':');
      const std::string kind = identifier();
      if (kind == "T") return make_spec({BinaryPolySpec{BinaryKind::T}});
      if (kind == "O") return make_spec({BinaryPolySpec{BinaryKind::O}});
      if (kind == "I") return make_spec({BinaryPolySpec{BinaryKind::I}});
      fail("binary kind must be T, O or I");
    }
    if (name == "extraspecial") {
      expect(':');
      bool plus;
      if (accept('+')) {
        plus = true;
      } else if (accept('-')) {
        plus = false;
      } else {
        fail("extraspecial variant must be + or -");
      }
      return make_spec({Extraspecial2Spec{argument(0), plus}});
    }
    if (name == "heis") {
      const int p = prime_argument();
      return make_spec({HeisenbergSpec{p, argument(0)}});
    }
    if (name == "elemab") {
      const int p = prime_argument();
      return make_spec({ElemAbSpec{p, argument(1)}});
    }
    if (name == "product") {
      expect('(');
      auto left = parse_spec();
      expect(',');
      auto right = parse_spec();
      expect(')');
      return make_spec({ProductSpec{std::move(left), std::move(right)}});
    }
    if (name == "semidirect") {
      expect('(');
      auto acting = parse_spec();
      expect(',');
      auto kernel = parse_spec();
      std::optional<std::vector<std::vector<int>>> action;
      if (accept(',')) {
        expect('[');
        action.emplace();
        do {
          std::vector<int> entry{integer()};
          while (accept('.')) entry.push_back(integer());
          action->push_back(std::move(entry));
        } while (accept(';'));
        expect(']');
      }
      expect(')');
      return make_spec({SemidirectSpec{std::move(acting), std::move(kernel), std::move(action)}});
    }
    fail("unknown group family '" + name + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

GroupSpecPtr parse_group_spec(std::string_view text) { return Parser(text).parse_all(); }

std::string to_string(const GroupSpec& spec) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CyclicSpec>) {
          return "cyclic:" + std::to_string(s.n);
        } else if constexpr (std::is_same_v<T, DihedralSpec>) {
          return "dihedral:" + std::to_string(s.n);
        } else if constexpr (std::is_same_v<T, BinaryDihedralSpec>) {
          return "bindihedral:" + std::to_string(s.n);
        } else if constexpr (std::is_same_v<T, BinaryPolySpec>) {
          return std::string("binary:") + (s.kind == BinaryKind::T ? "T" : s.kind == BinaryKind::O ? "O" : "I");
        } else if constexpr (std::is_same_v<T, Extraspecial2Spec>) {
          return std::string("extraspecial:") + (s.plus ? "+" : "-") + ":" + std::to_string(s.n);
        } else if constexpr (std::is_same_v<T, HeisenbergSpec>) {
          return "heis:" + std::to_string(s.p) + ":" + std::to_string(s.n);
        } else if constexpr (std::is_same_v<T, ElemAbSpec>) {
          return "elemab:" + std::to_string(s.p) + ":" + std::to_string(s.n);
        } else if constexpr (std::is_same_v<T, ProductSpec>) {
          return "product(" + to_string(*s.left) + "," + to_string(*s.right) + ")";
        } else {
          std::string out = "semidirect(" + to_string(*s.acting) + "," + to_string(*s.kernel);
          if (s.action) {
            out += ",[";
            for (std::size_t i = 0; i < s.action->size(); ++i) {
              if (i) out += ";";
              for (std::size_t j = 0; j < (*s.action)[i].size(); ++j) {
                if (j) out += ".";
                out += std::to_string((*s.action)[i][j]);
              }
            }
            out += "]";
          }
          return out + ")";
        }
      },
      spec.node);
}

}  // namespace mckay
