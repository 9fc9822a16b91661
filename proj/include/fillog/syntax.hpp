#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fillog {

enum class Language { BiG, Ginv, Gsquare };

std::string to_string(Language lang);
// Accepts "big", "ginv", "g2" (case-insensitive). Throws std::invalid_argument.
Language parse_language(std::string_view text);

enum class Kind { Var, Const0, Const1, GNeg, InvNeg, StrongNeg, Delta, And, Or, Impl, Coimpl };

bool is_unary(Kind k);
bool is_binary(Kind k);

// Immutable formula handle; copies share structure.
class Formula {
public:
    Formula();  // the constant 0

    Kind kind() const;
    const std::string& name() const;  // Var only
    const Formula& child() const;                             // unary only
    const Formula& left() const;                              // binary only
    const Formula& right() const;                             // binary only

    std::size_t size() const;
    std::size_t depth() const;
    std::set<std::string> variables() const;
    void collect_variables(std::set<std::string>& out) const;

    friend bool operator==(const Formula& a, const Formula& b);
    friend bool operator<(const Formula& a, const Formula& b);  // structural, arbitrary but total

    static Formula make_var(std::string name);
    static Formula make_const(bool one);
    static Formula make_unary(Kind k, Formula child);
    static Formula make_binary(Kind k, Formula l, Formula r);

private:
    struct Node;
    explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

struct Formula::Node {
    Kind kind;
    std::string name;
    std::vector<Formula> kids;
};

inline Kind Formula::kind() const { return node_->kind; }
inline const std::string& Formula::name() const { return node_->name; }

// ── builders ──
namespace fml {
Formula var(std::string name);
Formula zero();
Formula one();
Formula neg(Formula f);     // ~
Formula ineg(Formula f);    // ~i
Formula sneg(Formula f);    // ¬
Formula delta(Formula f);   // △
Formula conj(Formula a, Formula b);
Formula disj(Formula a, Formula b);
Formula impl(Formula a, Formula b);
Formula coimpl(Formula a, Formula b);
Formula iff(Formula a, Formula b);  // (a -> b) & (b -> a)
Formula delta_top(Formula f);       // △f & ~¬f
}  // namespace fml

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, std::size_t pos);
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

class LanguageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

Formula parse(std::string_view text);
std::string print(const Formula& f);

bool check_language(const Formula& f, Language lang);
void require_language(const Formula& f, Language lang);  // throws LanguageError

Formula nnf_ginv(const Formula& f);
Formula nnf_g2(const Formula& f);

std::string fresh_variable(const std::set<std::string>& avoid);

}  // namespace fillog
