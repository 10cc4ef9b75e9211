#pragma once

// Group words over the generators of a braid group, a punctured-sphere
// mapping class group, or a (hyperelliptic) surface mapping class group.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace mcgrep {

enum class GroupKind { braid, sphere, genus2, hyperelliptic };

/// Group in which a word is interpreted: braid(n), sphere(n), genus2 or
/// hyperelliptic(g).
class Context {
 public:
  static Context braid(int n);
  static Context sphere(int n);
  static Context genus2();
  static Context hyperelliptic(int g);

  GroupKind kind() const { return kind_; }
  /// n for braid/sphere, g for genus2 (always 2) and hyperelliptic.
  int parameter() const { return param_; }
  int generator_count() const;
  /// 's' for half-twist generators, 't' for Dehn-twist generators.
  char symbol() const;
  /// Strand or puncture count of the underlying braid group.
  int strands() const;
  std::string name() const;

  bool operator==(const Context&) const = default;

 private:
  Context(GroupKind kind, int param) : kind_(kind), param_(param) {}
  GroupKind kind_;
  int param_;
};

struct Letter {
  int index = 1;
  int sign = 1;

  Letter inverse() const { return Letter{index, -sign}; }
  bool operator==(const Letter&) const = default;
};

class Word {
 public:
  explicit Word(Context ctx) : ctx_(ctx) {}
  Word(Context ctx, std::vector<Letter> letters);
  /// Convenience: signed indices, e.g. {1, -2} for s1 s2^-1.
  Word(Context ctx, std::initializer_list<int> signed_indices);

  const Context& context() const { return ctx_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  Word inverse() const;
  Word power(int k) const;
  /// Same letters reinterpreted in another context with enough generators.
  Word in_context(Context ctx) const;

  Word& operator*=(const Word& other);
  friend Word operator*(Word a, const Word& b) { return a *= b; }
  bool operator==(const Word&) const = default;

 private:
  Context ctx_;
  std::vector<Letter> letters_;
};

/// Thrown by parse_word; position is the 0-based character offset.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses whitespace-separated letters such as "s1 s2^-1". Parenthesised
/// groups with integer powers, "(s1 s2)^3", are also accepted. The empty string
/// and "e" denote the identity.
Word parse_word(std::string_view text, Context ctx);

std::string to_text(const Word& w);

/// Cancels adjacent inverse pairs until none remain.
Word free_reduce(const Word& w);

/// Signed letter count.
int letter_sum(const Word& w);

/// Relators that must evaluate to the identity under the context's
/// representation: braid and far-commutation relators always, plus the sphere
/// relators for sphere(n) and the chain, involution and centrality relators for
/// genus2 / hyperelliptic(g).
std::vector<Word> relation_suite(Context ctx);

/// Relators paired with a short human-readable label, in relation_suite order.
struct NamedRelator {
  std::string label;
  Word word;
};
std::vector<NamedRelator> named_relation_suite(Context ctx);

/// Positive run of consecutive generators from `from` to `to`, descending
/// when from > to: chain_word(c, 1, 3) = s1 s2 s3, chain_word(c, 3, 1) = s3 s2 s1.
Word chain_word(Context ctx, int from, int to);

}  // namespace mcgrep
