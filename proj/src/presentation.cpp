#include "ecom/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace ecom {

namespace {

void push_syllable(std::vector<Syllable>& out, int gen, long exp) {
    if (exp == 0) return;
    if (!out.empty() && out.back().gen == gen) {
        out.back().exp += exp;
        if (out.back().exp == 0) out.pop_back();
        return;
    }
    out.push_back(Syllable{gen, exp});
}

}  // namespace

Word Word::inverse() const {
    Word r;
    for (auto it = syllables.rbegin(); it != syllables.rend(); ++it)
        r.syllables.push_back(Syllable{it->gen, -it->exp});
    return r;
}

Word Word::concat(const Word& a, const Word& b) {
    Word r = a;
    for (const auto& s : b.syllables) push_syllable(r.syllables, s.gen, s.exp);
    return r;
}

namespace {

struct Token {
    enum Kind { LANGLE, RANGLE, BAR, COMMA, STAR, CARET, LPAREN, RPAREN, EQUALS, IDENT, INT, END };
    Kind kind;
    std::string text;
    long value = 0;
    size_t pos = 0;
};

class Lexer {
  public:
    explicit Lexer(std::string_view s) : s_(s) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

    [[noreturn]] void error(const std::string& msg) const {
        std::ostringstream os;
        os << "syntax error at position " << tok_.pos << ": " << msg;
        fail(errc::syntax, os.str());
    }

  private:
    void advance() {
        while (i_ < s_.size() && std::isspace((unsigned char)s_[i_])) ++i_;
        tok_.pos = i_;
        if (i_ >= s_.size()) {
            tok_.kind = Token::END;
            tok_.text = "<end>";
            return;
        }
        char c = s_[i_];
        auto single = [&](Token::Kind k) {
            tok_.kind = k;
            tok_.text = std::string(1, c);
            ++i_;
        };
        switch (c) {
            case '<': return single(Token::LANGLE);
            case '>': return single(Token::RANGLE);
            case '|': return single(Token::BAR);
            case ',': return single(Token::COMMA);
            case '*': return single(Token::STAR);
            case '^': return single(Token::CARET);
            case '(': return single(Token::LPAREN);
            case ')': return single(Token::RPAREN);
            case '=': return single(Token::EQUALS);
            default: break;
        }
        if (c == '-' || std::isdigit((unsigned char)c)) {
            size_t start = i_;
            if (c == '-') ++i_;
            if (i_ >= s_.size() || !std::isdigit((unsigned char)s_[i_])) {
                std::ostringstream os;
                os << "syntax error at position " << start << ": stray '-'";
                fail(errc::syntax, os.str());
            }
            long v = 0;
            while (i_ < s_.size() && std::isdigit((unsigned char)s_[i_]))
                v = v * 10 + (s_[i_++] - '0');
            tok_.kind = Token::INT;
            tok_.value = (c == '-') ? -v : v;
            tok_.text = std::string(s_.substr(start, i_ - start));
            return;
        }
        if (std::isalpha((unsigned char)c)) {
            size_t start = i_;
            while (i_ < s_.size() &&
                   (std::isalnum((unsigned char)s_[i_]) || s_[i_] == '_' || s_[i_] == '\''))
                ++i_;
            tok_.kind = Token::IDENT;
            tok_.text = std::string(s_.substr(start, i_ - start));
            return;
        }
        std::ostringstream os;
        os << "syntax error at position " << i_ << ": unexpected character '" << c << "'";
        fail(errc::syntax, os.str());
    }

    std::string_view s_;
    size_t i_ = 0;
    Token tok_;
};

class Parser {
  public:
    explicit Parser(std::string_view text) : lex_(text) {}

    Presentation run() {
        expect(Token::LANGLE, "'<'");
        parse_generators();
        if (lex_.peek().kind == Token::BAR) {
            lex_.take();
            if (lex_.peek().kind != Token::RANGLE) parse_relations();
        }
        expect(Token::RANGLE, "'>'");
        if (lex_.peek().kind != Token::END) lex_.error("trailing input after '>'");
        return std::move(p_);
    }

  private:
    void expect(Token::Kind k, const char* what) {
        if (lex_.peek().kind != k) lex_.error(std::string("expected ") + what);
        lex_.take();
    }

    void parse_generators() {
        while (true) {
            if (lex_.peek().kind != Token::IDENT) lex_.error("expected generator name");
            Token t = lex_.take();
            if (gen_index_.count(t.text)) lex_.error("duplicate generator '" + t.text + "'");
            gen_index_[t.text] = (int)p_.generators.size();
            p_.generators.push_back(t.text);
            if (lex_.peek().kind != Token::COMMA) break;
            lex_.take();
        }
    }

    void parse_relations() {
        while (true) {
            parse_relation();
            if (lex_.peek().kind != Token::COMMA) break;
            lex_.take();
        }
    }

    void parse_relation() {
        std::vector<Word> chain{parse_word()};
        while (lex_.peek().kind == Token::EQUALS) {
            lex_.take();
            chain.push_back(parse_word());
        }
        if (chain.size() == 1) {
            add_relator(chain[0]);
        } else {
            for (size_t i = 0; i + 1 < chain.size(); ++i)
                add_relator(Word::concat(chain[i], chain[i + 1].inverse()));
        }
    }

    void add_relator(const Word& w) {
        if (!w.empty()) p_.relators.push_back(w);
    }

    bool starts_term() const {
        auto k = lex_.peek().kind;
        return k == Token::IDENT || k == Token::LPAREN;
    }

    Word parse_word() {
        // '1' denotes the empty word.
        if (lex_.peek().kind == Token::INT) {
            Token t = lex_.take();
            if (t.value != 1) lex_.error("unexpected integer '" + t.text + "' in word");
            return Word{};
        }
        Word w = parse_term();
        while (true) {
            if (lex_.peek().kind == Token::STAR) {
                lex_.take();
                w = Word::concat(w, parse_term());
            } else if (starts_term()) {
                w = Word::concat(w, parse_term());
            } else {
                break;
            }
        }
        return w;
    }

    Word parse_term() {
        bool parenthesized = false;
        Word base;
        if (lex_.peek().kind == Token::LPAREN) {
            lex_.take();
            base = parse_word();
            expect(Token::RPAREN, "')'");
            parenthesized = true;
        } else if (lex_.peek().kind == Token::IDENT) {
            base = ident_word(lex_.take());
        } else {
            lex_.error("expected generator or '('");
        }
        if (lex_.peek().kind != Token::CARET) return base;
        lex_.take();

        if (lex_.peek().kind == Token::INT) {
            return power(base, lex_.take().value);
        }
        if (lex_.peek().kind == Token::LPAREN) {
            // Either a parenthesized integer exponent or a conjugator word.
            lex_.take();
            if (lex_.peek().kind == Token::INT) {
                long e = lex_.take().value;
                expect(Token::RPAREN, "')'");
                return power(base, e);
            }
            Word conj = parse_word();
            expect(Token::RPAREN, "')'");
            if (!parenthesized)
                lex_.error("conjugation requires a parenthesized base, as in (a)^b");
            return Word::concat(Word::concat(conj.inverse(), base), conj);
        }
        if (lex_.peek().kind == Token::IDENT) {
            if (!parenthesized)
                lex_.error("conjugation requires a parenthesized base, as in (a)^b");
            Word conj = ident_word(lex_.take());
            return Word::concat(Word::concat(conj.inverse(), base), conj);
        }
        lex_.error("expected exponent after '^'");
    }

    // A single generator, or a run like "xy" split greedily into declared
    // one-letter generators.
    Word ident_word(const Token& t) {
        auto it = gen_index_.find(t.text);
        if (it != gen_index_.end()) {
            Word w;
            w.syllables.push_back(Syllable{it->second, 1});
            return w;
        }
        Word w;
        for (char c : t.text) {
            auto jt = gen_index_.find(std::string(1, c));
            if (jt == gen_index_.end())
                fail(errc::unknown_generator, "unknown generator '" + t.text + "' at position " +
                                                  std::to_string(t.pos));
            push_syllable(w.syllables, jt->second, 1);
        }
        return w;
    }

    static Word power(const Word& base, long e) {
        if (e == 0) return Word{};
        Word unit = e > 0 ? base : base.inverse();
        long reps = e > 0 ? e : -e;
        // Single-syllable bases fold into one syllable.
        if (unit.syllables.size() == 1) {
            Word w;
            w.syllables.push_back(Syllable{unit.syllables[0].gen, unit.syllables[0].exp * reps});
            return w;
        }
        Word w;
        for (long i = 0; i < reps; ++i) w = Word::concat(w, unit);
        return w;
    }

    Lexer lex_;
    Presentation p_;
    std::map<std::string, int> gen_index_;
};

}  // namespace

Presentation parse_presentation(std::string_view text) { return Parser(text).run(); }

std::string print_word(const Presentation& p, const Word& w) {
    if (w.empty()) return "1";
    std::string out;
    for (size_t i = 0; i < w.syllables.size(); ++i) {
        if (i) out += '*';
        out += p.generators[w.syllables[i].gen];
        if (w.syllables[i].exp != 1) out += '^' + std::to_string(w.syllables[i].exp);
    }
    return out;
}

std::string print_presentation(const Presentation& p) {
    std::string out = "< ";
    for (size_t i = 0; i < p.generators.size(); ++i) {
        if (i) out += ", ";
        out += p.generators[i];
    }
    out += " | ";
    for (size_t i = 0; i < p.relators.size(); ++i) {
        if (i) out += ", ";
        out += print_word(p, p.relators[i]);
    }
    out += " >";
    return out;
}

// ---------------------------------------------------------------------------
// Todd-Coxeter

namespace {

// Column layout: 2g for generator g, 2g+1 for its inverse.
constexpr int inv_col(int x) { return x ^ 1; }

class Enumerator {
  public:
    Enumerator(const Presentation& p, int max_cosets)
        : ngens_((int)p.generators.size()), max_cosets_(max_cosets) {
        for (const Word& w : p.relators) {
            std::vector<int> cols;
            for (const Syllable& s : w.syllables) {
                int col = s.exp > 0 ? 2 * s.gen : 2 * s.gen + 1;
                long reps = s.exp > 0 ? s.exp : -s.exp;
                for (long i = 0; i < reps; ++i) cols.push_back(col);
            }
            if (!cols.empty()) relators_.push_back(std::move(cols));
        }
        new_row();
    }

    void run() {
        for (size_t alpha = 0; alpha < table_.size(); ++alpha) {
            if (!alive((int)alpha)) continue;
            for (const auto& rel : relators_) {
                scan_and_fill((int)alpha, rel);
                if (!alive((int)alpha)) break;
            }
            if (!alive((int)alpha)) continue;
            for (int x = 0; x < 2 * ngens_; ++x)
                if (entry((int)alpha, x) == -1) define((int)alpha, x);
        }
    }

    RealizedGroup extract(const Presentation& p) const {
        // Compact live rows; row 0 stays the identity coset.
        std::vector<int> newid(table_.size(), -1);
        int n = 0;
        for (size_t i = 0; i < table_.size(); ++i)
            if (rep((int)i) == (int)i) newid[i] = n++;

        // Action of each column on compacted cosets.
        std::vector<std::vector<int>> act(2 * ngens_, std::vector<int>(n));
        for (size_t i = 0; i < table_.size(); ++i) {
            if (newid[i] == -1) continue;
            for (int x = 0; x < 2 * ngens_; ++x) {
                int img = table_[i][x];
                if (img == -1) fail(errc::internal, "coset table closed with holes");
                act[x][newid[i]] = newid[rep(img)];
            }
        }

        // Definition word of each coset: BFS over columns from coset 0.
        std::vector<std::vector<int>> word(n);
        std::vector<bool> seen(n, false);
        seen[0] = true;
        std::vector<int> queue{0};
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int c = queue[qi];
            for (int x = 0; x < 2 * ngens_; ++x) {
                int d = act[x][c];
                if (!seen[d]) {
                    seen[d] = true;
                    word[d] = word[c];
                    word[d].push_back(x);
                    queue.push_back(d);
                }
            }
        }

        // Regular representation: i * elem(j) applies j's definition word to i.
        std::vector<int> mul(n * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                int c = i;
                for (int x : word[j]) c = act[x][c];
                mul[i * n + j] = c;
            }
        FiniteGroup g = FiniteGroup::from_flat_table(n, std::move(mul));

        std::vector<int> gen_ids(ngens_);
        for (int i = 0; i < ngens_; ++i) gen_ids[i] = act[2 * i][0];

        std::vector<std::string> names(n);
        for (int j = 0; j < n; ++j) {
            if (word[j].empty()) {
                names[j] = "1";
                continue;
            }
            Word w;
            for (int x : word[j]) push_syllable(w.syllables, x / 2, x % 2 == 0 ? 1 : -1);
            names[j] = print_word(p, w);
        }
        g.set_names(std::move(names));
        return RealizedGroup{std::move(g), std::move(gen_ids)};
    }

  private:
    int rep(int c) const {
        while (p_[c] != c) c = p_[c];
        return c;
    }

    bool alive(int c) const { return p_[c] == c; }

    int entry(int c, int x) const { return table_[c][x]; }

    int new_row() {
        if ((int)table_.size() >= max_cosets_)
            fail(errc::coset_limit, "coset enumeration exceeded " + std::to_string(max_cosets_) +
                                        " cosets; the group may be infinite or the limit too low");
        table_.emplace_back(2 * ngens_, -1);
        p_.push_back((int)table_.size() - 1);
        return (int)table_.size() - 1;
    }

    int define(int a, int x) {
        int b = new_row();
        table_[a][x] = b;
        table_[b][inv_col(x)] = a;
        return b;
    }

    void merge(int a, int b) {
        a = rep(a);
        b = rep(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);
        p_[b] = a;
        queue_.push_back(b);
    }

    void coincidence(int a, int b) {
        merge(a, b);
        while (!queue_.empty()) {
            int e = queue_.back();
            queue_.pop_back();
            for (int x = 0; x < 2 * ngens_; ++x) {
                int f = table_[e][x];
                if (f == -1) continue;
                table_[f][inv_col(x)] = -1;
                int e2 = rep(e), f2 = rep(f);
                if (table_[e2][x] != -1)
                    merge(f2, table_[e2][x]);
                else if (table_[f2][inv_col(x)] != -1)
                    merge(e2, table_[f2][inv_col(x)]);
                else {
                    table_[e2][x] = f2;
                    table_[f2][inv_col(x)] = e2;
                }
            }
        }
    }

    void scan_and_fill(int alpha, const std::vector<int>& w) {
        int f = alpha, b = alpha;
        int i = 0, r = (int)w.size() - 1;
        while (true) {
            while (i <= r && table_[f][w[i]] != -1) f = table_[f][w[i++]];
            if (i > r) {
                if (f != b) coincidence(f, b);
                return;
            }
            while (r >= i && table_[b][inv_col(w[r])] != -1) b = table_[b][inv_col(w[r--])];
            if (r < i) {
                coincidence(f, b);
                return;
            }
            if (r == i) {
                // Deduction closes the scan.
                table_[f][w[i]] = b;
                table_[b][inv_col(w[i])] = f;
                return;
            }
            define(f, w[i]);
        }
    }

    int ngens_;
    int max_cosets_;
    std::vector<std::vector<int>> relators_;
    std::vector<std::vector<int>> table_;
    std::vector<int> p_;  // union-find over coset indices, min id is the root
    std::vector<int> queue_;
};

}  // namespace

RealizedGroup todd_coxeter(const Presentation& p, int max_cosets) {
    if (p.generators.empty()) fail(errc::bad_input, "presentation has no generators");
    if (max_cosets < 1) fail(errc::bad_input, "max_cosets must be at least 1");
    Enumerator e(p, max_cosets);
    e.run();
    return e.extract(p);
}

bool verify_relators(const FiniteGroup& g, const Presentation& p,
                     const std::vector<int>& assignment) {
    if (assignment.size() != p.generators.size())
        fail(errc::bad_input, "assignment does not cover all generators");
    for (const Word& w : p.relators) {
        int v = 0;
        for (const Syllable& s : w.syllables) v = g.mul(v, g.pow(assignment[s.gen], s.exp));
        if (v != 0) return false;
    }
    return true;
}

}  // namespace ecom
