#pragma once

// CSS selector subset used for banner matching: type, *, #id, .class,
// attribute tests ([a], [a=v], [a^=v], [a$=v], [a*=v]), :not(simple),
// descendant and child combinators, and comma grouping. Anything outside
// the subset (pseudo-elements, sibling combinators, :nth-*, ...) parses to
// an Unsupported value that callers count rather than guess at.

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "noticescope/detail/strings.hpp"

namespace noticescope::domquery {

struct AttrTest {
    enum class Op { Exists, Equals, Prefix, Suffix, Contains };
    std::string name;  // lowercase
    Op op = Op::Exists;
    std::string value;  // case-sensitive
};

// One simple selector, the only form :not() accepts.
struct SimpleSelector {
    enum class Kind { Type, Id, Class, Attr };
    Kind kind;
    std::string name;  // tag (lowercase) / id / class
    AttrTest attr;     // Kind::Attr only
};

struct CompoundSelector {
    std::optional<std::string> type;  // lowercase; nullopt means any element
    std::optional<std::string> id;
    std::vector<std::string> classes;
    std::vector<AttrTest> attrs;
    std::vector<SimpleSelector> negations;

    bool empty() const {
        return !type && !id && classes.empty() && attrs.empty() && negations.empty();
    }
};

enum class Combinator { Descendant, Child };

// compound[0] (comb[0]) compound[1] ... ; combinators.size() + 1 == compounds.size()
struct ComplexSelector {
    std::vector<CompoundSelector> compounds;
    std::vector<Combinator> combinators;
};

struct SelectorAst {
    std::vector<ComplexSelector> alternatives;  // comma group
    std::string text;                           // original selector text
};

struct Unsupported {
    std::string reason;  // machine-readable class, e.g. "pseudo_element"
};

using SelectorParse = std::variant<SelectorAst, Unsupported>;

namespace impl {

inline bool is_ident_char(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
           c == '-' || c == '_' || static_cast<unsigned char>(c) >= 0x80;
}

struct SelParser {
    std::string_view s;
    size_t i = 0;
    std::string error;  // unsupported reason when non-empty

    void skip_ws() {
        while (i < s.size() && detail::is_space(s[i])) ++i;
    }

    bool fail(std::string reason) {
        if (error.empty()) error = std::move(reason);
        return false;
    }

    // identifier with simple backslash escapes
    std::string ident() {
        std::string out;
        while (i < s.size()) {
            if (s[i] == '\\' && i + 1 < s.size()) {
                out.push_back(s[i + 1]);
                i += 2;
            } else if (is_ident_char(s[i])) {
                out.push_back(s[i++]);
            } else {
                break;
            }
        }
        return out;
    }

    bool parse_attr(AttrTest& out) {
        ++i;  // '['
        skip_ws();
        std::string name = ident();
        if (name.empty()) return fail("attr_missing_name");
        out.name = detail::to_lower_ascii(name);
        skip_ws();
        if (i < s.size() && s[i] == ']') {
            ++i;
            out.op = AttrTest::Op::Exists;
            return true;
        }
        if (i >= s.size()) return fail("attr_unterminated");
        char c = s[i];
        if (c == '=') {
            out.op = AttrTest::Op::Equals;
            ++i;
        } else if ((c == '^' || c == '$' || c == '*') && i + 1 < s.size() && s[i + 1] == '=') {
            out.op = c == '^'   ? AttrTest::Op::Prefix
                     : c == '$' ? AttrTest::Op::Suffix
                                : AttrTest::Op::Contains;
            i += 2;
        } else if ((c == '~' || c == '|') && i + 1 < s.size() && s[i + 1] == '=') {
            return fail("attr_op_unsupported");
        } else {
            return fail("attr_bad_syntax");
        }
        skip_ws();
        if (i < s.size() && (s[i] == '"' || s[i] == '\'')) {
            char q = s[i++];
            std::string v;
            while (i < s.size() && s[i] != q) {
                if (s[i] == '\\' && i + 1 < s.size()) {
                    v.push_back(s[i + 1]);
                    i += 2;
                } else {
                    v.push_back(s[i++]);
                }
            }
            if (i >= s.size()) return fail("attr_unterminated_string");
            ++i;
            out.value = std::move(v);
        } else {
            std::string v = ident();
            if (v.empty()) return fail("attr_missing_value");
            out.value = std::move(v);
        }
        skip_ws();
        if (i >= s.size() || s[i] != ']') return fail("attr_unterminated");
        ++i;
        return true;
    }

    // one simple selector for :not()
    bool parse_simple(SimpleSelector& out) {
        if (i >= s.size()) return fail("not_empty_argument");
        char c = s[i];
        if (c == '#') {
            ++i;
            out.kind = SimpleSelector::Kind::Id;
            out.name = ident();
            if (out.name.empty()) return fail("empty_id");
            return true;
        }
        if (c == '.') {
            ++i;
            out.kind = SimpleSelector::Kind::Class;
            out.name = ident();
            if (out.name.empty()) return fail("empty_class");
            return true;
        }
        if (c == '[') {
            out.kind = SimpleSelector::Kind::Attr;
            return parse_attr(out.attr);
        }
        if (is_ident_char(c)) {
            out.kind = SimpleSelector::Kind::Type;
            out.name = detail::to_lower_ascii(ident());
            return true;
        }
        if (c == ':') return fail("not_argument_not_simple");
        return fail("not_bad_argument");
    }

    bool parse_compound(CompoundSelector& out, bool& progressed) {
        progressed = false;
        while (i < s.size()) {
            char c = s[i];
            if (c == '*') {
                ++i;
                progressed = true;
                continue;  // universal: no constraint
            }
            if (c == '#') {
                ++i;
                std::string id = ident();
                if (id.empty()) return fail("empty_id");
                if (out.id) return fail("duplicate_id_selector");
                out.id = std::move(id);
                progressed = true;
                continue;
            }
            if (c == '.') {
                ++i;
                std::string cls = ident();
                if (cls.empty()) return fail("empty_class");
                out.classes.push_back(std::move(cls));
                progressed = true;
                continue;
            }
            if (c == '[') {
                AttrTest t;
                if (!parse_attr(t)) return false;
                out.attrs.push_back(std::move(t));
                progressed = true;
                continue;
            }
            if (c == ':') {
                if (i + 1 < s.size() && s[i + 1] == ':') return fail("pseudo_element");
                size_t save = i;
                ++i;
                std::string name = detail::to_lower_ascii(ident());
                if (name == "not" && i < s.size() && s[i] == '(') {
                    ++i;
                    skip_ws();
                    SimpleSelector neg;
                    if (!parse_simple(neg)) return false;
                    skip_ws();
                    if (i >= s.size() || s[i] != ')') return fail("not_argument_not_simple");
                    ++i;
                    out.negations.push_back(std::move(neg));
                    progressed = true;
                    continue;
                }
                i = save;
                return fail(name.starts_with("nth") ? "pseudo_class_nth"
                                                    : "pseudo_class_" + (name.empty() ? "bare" : name));
            }
            if (is_ident_char(c)) {
                std::string type = detail::to_lower_ascii(ident());
                if (out.type) return fail("duplicate_type_selector");
                if (!progressed) {
                    out.type = std::move(type);
                    progressed = true;
                    continue;
                }
                // "div p" hits this only via combinator handling; a type
                // after other components ("x.y z" is fine, ".y x" is not
                // reachable here) means malformed input
                return fail("type_after_components");
            }
            break;  // combinator, comma, or end
        }
        return true;
    }

    bool parse_complex(ComplexSelector& out) {
        skip_ws();
        while (true) {
            CompoundSelector compound;
            bool progressed = false;
            if (!parse_compound(compound, progressed)) return false;
            if (!progressed) return fail("empty_compound");
            out.compounds.push_back(std::move(compound));

            size_t before_ws = i;
            skip_ws();
            if (i >= s.size() || s[i] == ',') break;
            if (s[i] == '>') {
                ++i;
                skip_ws();
                out.combinators.push_back(Combinator::Child);
                continue;
            }
            if (s[i] == '+' || s[i] == '~') return fail("sibling_combinator");
            if (before_ws != i) {
                out.combinators.push_back(Combinator::Descendant);
                continue;
            }
            return fail("unexpected_character");
        }
        return true;
    }
};

}  // namespace impl

// Parses selector text. Returns Unsupported (with a reason class) for
// anything outside the subset; never throws.
inline SelectorParse parse_selector(std::string_view text) {
    impl::SelParser p{detail::trim(text)};
    if (p.s.empty()) return Unsupported{"empty_selector"};
    SelectorAst ast;
    ast.text = std::string(p.s);
    while (true) {
        ComplexSelector complex;
        if (!p.parse_complex(complex)) return Unsupported{p.error};
        ast.alternatives.push_back(std::move(complex));
        p.skip_ws();
        if (p.i >= p.s.size()) break;
        if (p.s[p.i] != ',') return Unsupported{"unexpected_character"};
        ++p.i;
    }
    return ast;
}

}  // namespace noticescope::domquery
