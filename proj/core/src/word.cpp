#include "mcgrep/word.hpp"

#include <cctype>
#include <charconv>

namespace mcgrep {

Context Context::braid(int n) {
  if (n < 2) throw std::invalid_argument("braid(n) requires n >= 2");
  return Context(GroupKind::braid, n);
}

Context Context::sphere(int n) {
  if (n < 2) throw std::invalid_argument("sphere(n) requires n >= 2");
  return Context(GroupKind::sphere, n);
}

Context Context::genus2() { return Context(GroupKind::genus2, 2); }

Context Context::hyperelliptic(int g) {
  if (g < 1) throw std::invalid_argument("hyperelliptic(g) requires g >= 1");
  return Context(GroupKind::hyperelliptic, g);
}

int Context::generator_count() const { return strands() - 1; }

char Context::symbol() const {
  return (kind_ == GroupKind::braid || kind_ == GroupKind::sphere) ? 's' : 't';
}

int Context::strands() const {
  switch (kind_) {
    case GroupKind::braid:
    case GroupKind::sphere:
      return param_;
    case GroupKind::genus2:
    case GroupKind::hyperelliptic:
      return 2 * param_ + 2;
  }
  return param_;
}

std::string Context::name() const {
  switch (kind_) {
    case GroupKind::braid:
      return "braid(" + std::to_string(param_) + ")";
    case GroupKind::sphere:
      return "sphere(" + std::to_string(param_) + ")";
    case GroupKind::genus2:
      return "genus2";
    case GroupKind::hyperelliptic:
      return "hyperelliptic(" + std::to_string(param_) + ")";
  }
  return {};
}

Word::Word(Context ctx, std::vector<Letter> letters) : ctx_(ctx), letters_(std::move(letters)) {
  for (const auto& l : letters_) {
    if (l.index < 1 || l.index > ctx_.generator_count() || (l.sign != 1 && l.sign != -1)) {
      throw std::out_of_range("letter " + std::to_string(l.index) + " invalid in " +
                              ctx_.name());
    }
  }
}

Word::Word(Context ctx, std::initializer_list<int> signed_indices) : ctx_(ctx) {
  std::vector<Letter> letters;
  for (int v : signed_indices) letters.push_back(Letter{v < 0 ? -v : v, v < 0 ? -1 : 1});
  *this = Word(ctx, std::move(letters));
}

Word Word::inverse() const {
  Word r(ctx_);
  r.letters_.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) r.letters_.push_back(it->inverse());
  return r;
}

Word Word::power(int k) const {
  const Word base = k < 0 ? inverse() : *this;
  Word r(ctx_);
  for (int i = 0; i < (k < 0 ? -k : k); ++i) r *= base;
  return r;
}

Word Word::in_context(Context ctx) const { return Word(ctx, letters_); }

Word& Word::operator*=(const Word& other) {
  if (!(other.ctx_ == ctx_)) {
    throw std::invalid_argument("cannot concatenate words from " + ctx_.name() + " and " +
                                other.ctx_.name());
  }
  letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
  return *this;
}

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

class Parser {
 public:
  Parser(std::string_view text, Context ctx) : text_(text), ctx_(ctx) {}

  Word parse() {
    Word w = sequence();
    skip_space();
    if (pos_ != text_.size()) {
      throw ParseError(text_[pos_] == ')' ? "unbalanced ')'" : "unexpected character", pos_);
    }
    return w;
  }

 private:
  Word sequence() {
    Word w(ctx_);
    for (;;) {
      skip_space();
      if (pos_ == text_.size() || text_[pos_] == ')') return w;
      Word item = atom();
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '^') {
        ++pos_;
        item = item.power(integer(true));
      }
      w *= item;
    }
  }

  Word atom() {
    const std::size_t start = pos_;
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Word inner = sequence();
      if (pos_ == text_.size()) throw ParseError("missing ')'", start);
      ++pos_;
      return inner;
    }
    if (c == 'e' && (pos_ + 1 == text_.size() || !std::isdigit(static_cast<unsigned char>(
                                                       text_[pos_ + 1])))) {
      ++pos_;
      return Word(ctx_);
    }
    if (c == 's' || c == 't') {
      if (c != ctx_.symbol()) {
        throw ParseError(std::string("generator '") + c + "' not used in " + ctx_.name() +
                             " (expected '" + ctx_.symbol() + "')",
                         start);
      }
      ++pos_;
      const int index = integer(false);
      if (index < 1 || index > ctx_.generator_count()) {
        throw ParseError("generator index " + std::to_string(index) + " out of range for " +
                             ctx_.name() + " (max " + std::to_string(ctx_.generator_count()) +
                             ")",
                         start);
      }
      return Word(ctx_, {Letter{index, 1}});
    }
    throw ParseError(std::string("unexpected character '") + c + "'", start);
  }

  int integer(bool allow_sign) {
    const std::size_t start = pos_;
    bool negative = false;
    if (allow_sign && pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
    }
    int value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc() || ptr == text_.data() + pos_) throw ParseError("expected integer", start);
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return negative ? -value : value;
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  std::string_view text_;
  Context ctx_;
  std::size_t pos_ = 0;
};

Word commutator(const Word& a, const Word& b) { return a * b * a.inverse() * b.inverse(); }

}  // namespace

Word parse_word(std::string_view text, Context ctx) { return Parser(text, ctx).parse(); }

std::string to_text(const Word& w) {
  std::string out;
  for (const auto& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += w.context().symbol();
    out += std::to_string(l.index);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

Word free_reduce(const Word& w) {
  std::vector<Letter> stack;
  stack.reserve(w.size());
  for (const auto& l : w.letters()) {
    if (!stack.empty() && stack.back() == l.inverse()) {
      stack.pop_back();
    } else {
      stack.push_back(l);
    }
  }
  return Word(w.context(), std::move(stack));
}

int letter_sum(const Word& w) {
  int sum = 0;
  for (const auto& l : w.letters()) sum += l.sign;
  return sum;
}

Word chain_word(Context ctx, int from, int to) {
  std::vector<Letter> letters;
  const int step = from <= to ? 1 : -1;
  for (int i = from;; i += step) {
    letters.push_back(Letter{i, 1});
    if (i == to) break;
  }
  return Word(ctx, std::move(letters));
}

std::vector<NamedRelator> named_relation_suite(Context ctx) {
  std::vector<NamedRelator> out;
  const int m = ctx.generator_count();
  const char s = ctx.symbol();
  auto gen = [&](int i) { return Word(ctx, {Letter{i, 1}}); };
  auto name = [&](int i) { return std::string(1, s) + std::to_string(i); };

  for (int i = 1; i + 1 <= m; ++i) {
    const Word a = gen(i), b = gen(i + 1);
    out.push_back({"braid " + name(i) + "," + name(i + 1), (a * b * a) * (b * a * b).inverse()});
  }
  for (int i = 1; i <= m; ++i) {
    for (int j = i + 2; j <= m; ++j) {
      out.push_back({"commute " + name(i) + "," + name(j), commutator(gen(i), gen(j))});
    }
  }

  switch (ctx.kind()) {
    case GroupKind::braid:
      break;
    case GroupKind::sphere:
      out.push_back({"sphere boundary", chain_word(ctx, 1, m) * chain_word(ctx, m, 1)});
      out.push_back({"sphere full twist", chain_word(ctx, 1, m).power(ctx.strands())});
      break;
    case GroupKind::genus2:
    case GroupKind::hyperelliptic: {
      const Word iota = chain_word(ctx, 1, m) * chain_word(ctx, m, 1);
      out.push_back({"chain (" + name(1) + ".." + name(m) + ")^" + std::to_string(m + 1),
                     chain_word(ctx, 1, m).power(m + 1)});
      out.push_back({"involution squared", iota.power(2)});
      for (int i = 1; i <= m; ++i) {
        out.push_back({"involution central " + name(i), commutator(iota, gen(i))});
      }
      break;
    }
  }
  return out;
}

std::vector<Word> relation_suite(Context ctx) {
  std::vector<Word> out;
  for (auto& r : named_relation_suite(ctx)) out.push_back(std::move(r.word));
  return out;
}

}  // namespace mcgrep
