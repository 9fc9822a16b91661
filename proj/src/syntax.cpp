#include "fillog/syntax.hpp"

#include <algorithm>
#include <cctype>

namespace fillog {

std::string to_string(Language lang) {
    switch (lang) {
        case Language::BiG: return "big";
        case Language::Ginv: return "ginv";
        case Language::Gsquare: return "g2";
    }
    return "?";
}

Language parse_language(std::string_view text) {
    std::string s(text);
    std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
    if (s == "big") return Language::BiG;
    if (s == "ginv") return Language::Ginv;
    if (s == "g2" || s == "gsquare") return Language::Gsquare;
    throw std::invalid_argument("unknown language '" + std::string(text) + "'");
}

bool is_unary(Kind k) {
    return k == Kind::GNeg || k == Kind::InvNeg || k == Kind::StrongNeg || k == Kind::Delta;
}

bool is_binary(Kind k) {
    return k == Kind::And || k == Kind::Or || k == Kind::Impl || k == Kind::Coimpl;
}

// ── Formula ──

Formula::Formula() : Formula(make_const(false)) {}

const Formula& Formula::child() const {
    if (!is_unary(kind())) throw std::logic_error("child() on non-unary node");
    return node_->kids[0];
}
const Formula& Formula::left() const {
    if (!is_binary(kind())) throw std::logic_error("left() on non-binary node");
    return node_->kids[0];
}
const Formula& Formula::right() const {
    if (!is_binary(kind())) throw std::logic_error("right() on non-binary node");
    return node_->kids[1];
}

std::size_t Formula::size() const {
    std::size_t n = 1;
    for (const auto& k : node_->kids) n += k.size();
    return n;
}

std::size_t Formula::depth() const {
    std::size_t d = 0;
    for (const auto& k : node_->kids) d = std::max(d, k.depth() + 1);
    return d;
}

void Formula::collect_variables(std::set<std::string>& out) const {
    if (kind() == Kind::Var) out.insert(name());
    for (const auto& k : node_->kids) k.collect_variables(out);
}

std::set<std::string> Formula::variables() const {
    std::set<std::string> out;
    collect_variables(out);
    return out;
}

bool operator==(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return true;
    if (a.kind() != b.kind() || a.name() != b.name()) return false;
    const auto& ka = a.node_->kids;
    const auto& kb = b.node_->kids;
    for (std::size_t i = 0; i < ka.size(); ++i)
        if (!(ka[i] == kb[i])) return false;
    return true;
}

bool operator<(const Formula& a, const Formula& b) {
    if (a.node_ == b.node_) return false;
    if (a.kind() != b.kind()) return a.kind() < b.kind();
    if (a.name() != b.name()) return a.name() < b.name();
    const auto& ka = a.node_->kids;
    const auto& kb = b.node_->kids;
    for (std::size_t i = 0; i < ka.size(); ++i) {
        if (ka[i] < kb[i]) return true;
        if (kb[i] < ka[i]) return false;
    }
    return false;
}

Formula Formula::make_var(std::string name) {
    if (name.empty()) throw std::invalid_argument("empty variable name");
    return Formula(std::make_shared<const Node>(Node{Kind::Var, std::move(name), {}}));
}

Formula Formula::make_const(bool one) {
    static const auto c0 = std::make_shared<const Node>(Node{Kind::Const0, "", {}});
    static const auto c1 = std::make_shared<const Node>(Node{Kind::Const1, "", {}});
    return Formula(one ? c1 : c0);
}

Formula Formula::make_unary(Kind k, Formula child) {
    if (!is_unary(k)) throw std::invalid_argument("not a unary kind");
    return Formula(std::make_shared<const Node>(Node{k, "", {std::move(child)}}));
}

Formula Formula::make_binary(Kind k, Formula l, Formula r) {
    if (!is_binary(k)) throw std::invalid_argument("not a binary kind");
    return Formula(std::make_shared<const Node>(Node{k, "", {std::move(l), std::move(r)}}));
}

namespace fml {
Formula var(std::string name) { return Formula::make_var(std::move(name)); }
Formula zero() { return Formula::make_const(false); }
Formula one() { return Formula::make_const(true); }
Formula neg(Formula f) { return Formula::make_unary(Kind::GNeg, std::move(f)); }
Formula ineg(Formula f) { return Formula::make_unary(Kind::InvNeg, std::move(f)); }
Formula sneg(Formula f) { return Formula::make_unary(Kind::StrongNeg, std::move(f)); }
Formula delta(Formula f) { return Formula::make_unary(Kind::Delta, std::move(f)); }
Formula conj(Formula a, Formula b) { return Formula::make_binary(Kind::And, std::move(a), std::move(b)); }
Formula disj(Formula a, Formula b) { return Formula::make_binary(Kind::Or, std::move(a), std::move(b)); }
Formula impl(Formula a, Formula b) { return Formula::make_binary(Kind::Impl, std::move(a), std::move(b)); }
Formula coimpl(Formula a, Formula b) { return Formula::make_binary(Kind::Coimpl, std::move(a), std::move(b)); }
Formula iff(Formula a, Formula b) { return conj(impl(a, b), impl(b, a)); }
Formula delta_top(Formula f) { return conj(delta(f), neg(sneg(f))); }
}  // namespace fml

// ── parser ──

ParseError::ParseError(const std::string& msg, std::size_t pos)
    : std::runtime_error(msg + " at position " + std::to_string(pos)), pos_(pos) {}

namespace {

enum class Tok { Var, Zero, One, LParen, RParen, And, Or, Arrow, CoArrow, Iff, Tilde, Bang, Minus, Delta, DeltaTop, End };

struct Token {
    Tok tok;
    std::string text;
    std::size_t pos;
};

bool ident_start(char c) { return (c >= 'a' && c <= 'z') || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::vector<Token> lex(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) { ++i; continue; }
        std::size_t start = i;
        auto single = [&](Tok t) { out.push_back({t, std::string(1, c), start}); ++i; };
        switch (c) {
            case '(': single(Tok::LParen); continue;
            case ')': single(Tok::RParen); continue;
            case '&': single(Tok::And); continue;
            case '|': single(Tok::Or); continue;
            case '~': single(Tok::Tilde); continue;
            case '!': single(Tok::Bang); continue;
            case 'D': single(Tok::Delta); continue;
            case 'T': single(Tok::DeltaTop); continue;
            case '-':
                if (i + 1 < s.size() && s[i + 1] == '>') { out.push_back({Tok::Arrow, "->", start}); i += 2; }
                else if (i + 1 < s.size() && s[i + 1] == '<') { out.push_back({Tok::CoArrow, "-<", start}); i += 2; }
                else single(Tok::Minus);
                continue;
            case '<':
                if (s.substr(i, 3) == "<->") { out.push_back({Tok::Iff, "<->", start}); i += 3; continue; }
                throw ParseError("unknown operator '<'", start);
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            auto digits = s.substr(start, i - start);
            if (digits == "0") out.push_back({Tok::Zero, "0", start});
            else if (digits == "1") out.push_back({Tok::One, "1", start});
            else throw ParseError("only constants 0 and 1 are allowed, got '" + std::string(digits) + "'", start);
            continue;
        }
        if (ident_start(c)) {
            while (i < s.size() && ident_char(s[i])) ++i;
            out.push_back({Tok::Var, std::string(s.substr(start, i - start)), start});
            continue;
        }
        throw ParseError(std::string("unknown operator '") + c + "'", start);
    }
    out.push_back({Tok::End, "", s.size()});
    return out;
}

class Parser {
public:
    explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

    Formula parse_all() {
        Formula f = parse_iff();
        if (peek().tok != Tok::End) fail("unexpected '" + peek().text + "'");
        return f;
    }

private:
    const Token& peek() const { return toks_[pos_]; }
    Token take() { return toks_[pos_++]; }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, peek().pos); }

    Formula parse_iff() {
        Formula l = parse_impl();
        if (peek().tok == Tok::Iff) {
            take();
            Formula r = parse_impl();
            if (peek().tok == Tok::Iff) fail("'<->' is non-associative; add parentheses");
            return fml::iff(l, r);
        }
        return l;
    }

    Formula parse_impl() {
        Formula l = parse_or();
        if (peek().tok == Tok::Arrow) {
            take();
            return fml::impl(l, parse_impl());
        }
        if (peek().tok == Tok::CoArrow) {
            take();
            Formula r = parse_or();
            if (peek().tok == Tok::CoArrow || peek().tok == Tok::Arrow)
                fail("'-<' is non-associative; add parentheses");
            return fml::coimpl(l, r);
        }
        return l;
    }

    Formula parse_or() {
        Formula f = parse_and();
        while (peek().tok == Tok::Or) {
            take();
            f = fml::disj(f, parse_and());
        }
        return f;
    }

    Formula parse_and() {
        Formula f = parse_unary();
        while (peek().tok == Tok::And) {
            take();
            f = fml::conj(f, parse_unary());
        }
        return f;
    }

    Formula parse_unary() {
        switch (peek().tok) {
            case Tok::Tilde: take(); return fml::neg(parse_unary());
            case Tok::Bang: take(); return fml::sneg(parse_unary());
            case Tok::Minus: take(); return fml::ineg(parse_unary());
            case Tok::Delta: take(); return fml::delta(parse_unary());
            case Tok::DeltaTop: take(); return fml::delta_top(parse_unary());
            default: return parse_atom();
        }
    }

    Formula parse_atom() {
        const Token& t = peek();
        switch (t.tok) {
            case Tok::Var: return fml::var(take().text);
            case Tok::Zero: take(); return fml::zero();
            case Tok::One: take(); return fml::one();
            case Tok::LParen: {
                take();
                Formula f = parse_iff();
                if (peek().tok != Tok::RParen) fail("expected ')'");
                take();
                return f;
            }
            case Tok::End: fail("unexpected end of input");
            default: fail("unexpected '" + t.text + "'");
        }
    }

    std::vector<Token> toks_;
    std::size_t pos_ = 0;
};

// Binding strength used by the printer.
int prec(Kind k) {
    switch (k) {
        case Kind::Impl:
        case Kind::Coimpl: return 1;
        case Kind::Or: return 2;
        case Kind::And: return 3;
        default: return 4;
    }
}

void print_into(const Formula& f, std::string& out);

void print_wrapped(const Formula& f, bool paren, std::string& out) {
    if (paren) out += '(';
    print_into(f, out);
    if (paren) out += ')';
}

void print_into(const Formula& f, std::string& out) {
    switch (f.kind()) {
        case Kind::Var: out += f.name(); return;
        case Kind::Const0: out += '0'; return;
        case Kind::Const1: out += '1'; return;
        case Kind::GNeg: out += '~'; break;
        case Kind::InvNeg: out += '-'; break;
        case Kind::StrongNeg: out += '!'; break;
        case Kind::Delta: out += 'D'; break;
        default: {
            int lp = prec(f.left().kind());
            int rp = prec(f.right().kind());
            const char* op = "";
            bool lparen = false, rparen = false;
            switch (f.kind()) {
                case Kind::And: op = " & "; lparen = lp < 3; rparen = rp <= 3; break;
                case Kind::Or: op = " | "; lparen = lp < 2; rparen = rp <= 2; break;
                case Kind::Impl: op = " -> "; lparen = lp <= 1; rparen = false; break;
                case Kind::Coimpl: op = " -< "; lparen = lp <= 1; rparen = rp <= 1; break;
                default: break;
            }
            print_wrapped(f.left(), lparen, out);
            out += op;
            print_wrapped(f.right(), rparen, out);
            return;
        }
    }
    print_wrapped(f.child(), is_binary(f.child().kind()), out);
}

}  // namespace

Formula parse(std::string_view text) { return Parser(lex(text)).parse_all(); }

std::string print(const Formula& f) {
    std::string out;
    print_into(f, out);
    return out;
}

// ── language profiles ──

bool check_language(const Formula& f, Language lang) {
    Kind k = f.kind();
    if (k == Kind::InvNeg && lang != Language::Ginv) return false;
    if (k == Kind::StrongNeg && lang != Language::Gsquare) return false;
    if (is_unary(k)) return check_language(f.child(), lang);
    if (is_binary(k)) return check_language(f.left(), lang) && check_language(f.right(), lang);
    return true;
}

void require_language(const Formula& f, Language lang) {
    if (!check_language(f, lang))
        throw LanguageError("formula '" + print(f) + "' is not in language " + to_string(lang));
}

// ── negation normal forms ──

namespace {

Formula map_children(const Formula& f, Formula (*rec)(const Formula&)) {
    if (is_unary(f.kind())) return Formula::make_unary(f.kind(), rec(f.child()));
    if (is_binary(f.kind())) return Formula::make_binary(f.kind(), rec(f.left()), rec(f.right()));
    return f;
}

Formula nnf_inv_rec(const Formula& f);

// NNF of ~i g.
Formula push_inv(const Formula& g) {
    switch (g.kind()) {
        case Kind::Var: return fml::ineg(g);
        case Kind::Const0: return fml::one();
        case Kind::Const1: return fml::zero();
        case Kind::InvNeg: return nnf_inv_rec(g.child());
        case Kind::GNeg: return fml::coimpl(fml::one(), push_inv(g.child()));
        case Kind::Delta: return fml::coimpl(fml::one(), nnf_inv_rec(g.child()));
        case Kind::And: return fml::disj(push_inv(g.left()), push_inv(g.right()));
        case Kind::Or: return fml::conj(push_inv(g.left()), push_inv(g.right()));
        case Kind::Impl: return fml::coimpl(push_inv(g.right()), push_inv(g.left()));
        case Kind::Coimpl: return fml::impl(push_inv(g.right()), push_inv(g.left()));
        case Kind::StrongNeg: break;
    }
    throw LanguageError("strong negation in a Ginv formula");
}

Formula nnf_inv_rec(const Formula& f) {
    if (f.kind() == Kind::InvNeg) return push_inv(f.child());
    return map_children(f, nnf_inv_rec);
}

Formula nnf_strong_rec(const Formula& f);

// NNF of ¬g. Above ~ and △ the negation stays in place.
Formula push_strong(const Formula& g) {
    switch (g.kind()) {
        case Kind::Var: return fml::sneg(g);
        case Kind::Const0: return fml::one();
        case Kind::Const1: return fml::zero();
        case Kind::StrongNeg: return nnf_strong_rec(g.child());
        case Kind::GNeg:
        case Kind::Delta: return fml::sneg(nnf_strong_rec(g));
        case Kind::And: return fml::disj(push_strong(g.left()), push_strong(g.right()));
        case Kind::Or: return fml::conj(push_strong(g.left()), push_strong(g.right()));
        case Kind::Impl: return fml::coimpl(push_strong(g.right()), push_strong(g.left()));
        case Kind::Coimpl: return fml::impl(push_strong(g.right()), push_strong(g.left()));
        case Kind::InvNeg: break;
    }
    throw LanguageError("involutive negation in a G2 formula");
}

Formula nnf_strong_rec(const Formula& f) {
    if (f.kind() == Kind::StrongNeg) return push_strong(f.child());
    return map_children(f, nnf_strong_rec);
}

}  // namespace

Formula nnf_ginv(const Formula& f) {
    require_language(f, Language::Ginv);
    return nnf_inv_rec(f);
}

Formula nnf_g2(const Formula& f) {
    require_language(f, Language::Gsquare);
    return nnf_strong_rec(f);
}

std::string fresh_variable(const std::set<std::string>& avoid) {
    for (std::size_t i = 0;; ++i) {
        std::string name = "_t" + std::to_string(i);
        if (!avoid.count(name)) return name;
    }
}

}  // namespace fillog
