#pragma once

// Error-tolerant HTML parsing into an immutable element tree, plus the
// serializer used for inner-HTML capture. Construction never fails:
// unclosed tags are auto-closed, stray close tags are dropped, and unknown
// tags are kept as ordinary elements.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "noticescope/detail/strings.hpp"

namespace noticescope::domquery {

using NodeId = int32_t;
inline constexpr NodeId kNoNode = -1;

struct Node {
    enum class Kind { Element, Text };
    Kind kind = Kind::Element;
    std::string tag;  // lowercase; empty for text nodes
    // Source order, attribute names lowercase; the first occurrence of a
    // duplicated name wins.
    std::vector<std::pair<std::string, std::string>> attrs;
    std::string text;  // text nodes only, entities decoded
    NodeId parent = kNoNode;
    std::vector<NodeId> children;

    const std::string* attr(std::string_view name) const {
        for (const auto& [k, v] : attrs)
            if (k == name) return &v;
        return nullptr;
    }
};

namespace impl {

inline bool is_void_tag(std::string_view tag) {
    static constexpr std::string_view kVoid[] = {
        "area", "base", "br", "col", "embed", "hr", "img", "input",
        "link", "meta", "param", "source", "track", "wbr"};
    for (auto v : kVoid)
        if (tag == v) return true;
    return false;
}

inline bool is_raw_text_tag(std::string_view tag) {
    return tag == "script" || tag == "style";
}

inline void append_utf8(std::string& out, uint32_t cp) {
    if (cp > 0x10FFFF) cp = 0xFFFD;
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

// Decodes the five XML entities plus numeric character references.
// Anything else (e.g. &nbsp;) is kept verbatim.
inline std::string decode_entities(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    size_t i = 0;
    while (i < s.size()) {
        if (s[i] != '&') {
            out.push_back(s[i++]);
            continue;
        }
        size_t semi = s.find(';', i + 1);
        if (semi == std::string_view::npos || semi - i > 12) {
            out.push_back(s[i++]);
            continue;
        }
        std::string_view name = s.substr(i + 1, semi - i - 1);
        if (name == "amp") out.push_back('&');
        else if (name == "lt") out.push_back('<');
        else if (name == "gt") out.push_back('>');
        else if (name == "quot") out.push_back('"');
        else if (name == "apos") out.push_back('\'');
        else if (name.size() >= 2 && name[0] == '#') {
            uint32_t cp = 0;
            bool ok = true;
            bool hex = name[1] == 'x' || name[1] == 'X';
            size_t k = hex ? 2 : 1;
            if (k >= name.size()) ok = false;
            for (; ok && k < name.size(); ++k) {
                char c = detail::lower_ascii(name[k]);
                if (c >= '0' && c <= '9') cp = cp * (hex ? 16 : 10) + (c - '0');
                else if (hex && c >= 'a' && c <= 'f') cp = cp * 16 + (c - 'a' + 10);
                else ok = false;
            }
            if (!ok) {
                out.push_back(s[i++]);
                continue;
            }
            append_utf8(out, cp);
        } else {
            out.push_back(s[i++]);
            continue;
        }
        i = semi + 1;
    }
    return out;
}

inline void escape_text(std::string_view s, std::string& out) {
    for (char c : s) {
        if (c == '&') out += "&amp;";
        else if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else out.push_back(c);
    }
}

inline void escape_attr(std::string_view s, std::string& out) {
    for (char c : s) {
        if (c == '&') out += "&amp;";
        else if (c == '"') out += "&quot;";
        else if (c == '<') out += "&lt;";
        else out.push_back(c);
    }
}

}  // namespace impl

// Parsed document. Node 0 is a synthetic root holding the top-level nodes;
// real nodes start at id 1 and ids increase in document order. Immutable
// once built; safe to share across threads.
class DomDocument {
  public:
    const Node& node(NodeId id) const { return nodes_[static_cast<size_t>(id)]; }
    NodeId root() const { return 0; }
    size_t node_count() const { return nodes_.size(); }

    // Element ids in document order (excludes the synthetic root and text
    // nodes).
    const std::vector<NodeId>& elements() const { return elements_; }

    const std::vector<NodeId>* by_id(std::string_view id) const { return find(by_id_, id); }
    const std::vector<NodeId>* by_class(std::string_view cls) const { return find(by_class_, cls); }
    const std::vector<NodeId>* by_tag(std::string_view tag) const { return find(by_tag_, tag); }

    bool element_has_class(NodeId id, std::string_view cls) const {
        const std::string* v = node(id).attr("class");
        if (!v) return false;
        size_t i = 0;
        std::string_view s = *v;
        while (i < s.size()) {
            while (i < s.size() && detail::is_space(s[i])) ++i;
            size_t start = i;
            while (i < s.size() && !detail::is_space(s[i])) ++i;
            if (i > start && s.substr(start, i - start) == cls) return true;
        }
        return false;
    }

    // --- construction (parse_html only) ---
    struct Builder;

  private:
    friend struct Builder;
    static const std::vector<NodeId>* find(
        const std::unordered_map<std::string, std::vector<NodeId>>& m, std::string_view k) {
        auto it = m.find(std::string(k));
        return it == m.end() ? nullptr : &it->second;
    }

    std::vector<Node> nodes_;
    std::vector<NodeId> elements_;
    std::unordered_map<std::string, std::vector<NodeId>> by_id_;
    std::unordered_map<std::string, std::vector<NodeId>> by_class_;
    std::unordered_map<std::string, std::vector<NodeId>> by_tag_;
};

struct DomDocument::Builder {
    DomDocument doc;

    Builder() {
        Node root;
        root.kind = Node::Kind::Element;
        root.tag = "#root";
        doc.nodes_.push_back(std::move(root));
    }

    NodeId add(Node n, NodeId parent) {
        NodeId id = static_cast<NodeId>(doc.nodes_.size());
        n.parent = parent;
        doc.nodes_.push_back(std::move(n));
        doc.nodes_[static_cast<size_t>(parent)].children.push_back(id);
        return id;
    }

    Node& node_mut(NodeId id) { return doc.nodes_[static_cast<size_t>(id)]; }

    DomDocument finish() {
        for (NodeId id = 1; id < static_cast<NodeId>(doc.nodes_.size()); ++id) {
            const Node& n = doc.nodes_[static_cast<size_t>(id)];
            if (n.kind != Node::Kind::Element) continue;
            doc.elements_.push_back(id);
            doc.by_tag_[n.tag].push_back(id);
            if (const std::string* idattr = n.attr("id"); idattr && !idattr->empty())
                doc.by_id_[*idattr].push_back(id);
            if (const std::string* cls = n.attr("class")) {
                std::string_view s = *cls;
                size_t i = 0;
                while (i < s.size()) {
                    while (i < s.size() && detail::is_space(s[i])) ++i;
                    size_t start = i;
                    while (i < s.size() && !detail::is_space(s[i])) ++i;
                    if (i > start) {
                        std::string one(s.substr(start, i - start));
                        auto& v = doc.by_class_[one];
                        if (v.empty() || v.back() != id) v.push_back(id);
                    }
                }
            }
        }
        return std::move(doc);
    }
};

// Text encodings the parser can fix up before tokenizing. Utf8 (and the
// default auto) pass bytes through unchanged.
enum class EncodingHint { Auto, Utf8, Latin1 };

namespace impl {

inline std::string latin1_to_utf8(std::string_view bytes) {
    std::string out;
    out.reserve(bytes.size());
    for (unsigned char c : bytes) {
        if (c < 0x80) out.push_back(static_cast<char>(c));
        else append_utf8(out, c);
    }
    return out;
}

struct Tokenizer {
    std::string_view s;
    size_t pos = 0;

    bool eof() const { return pos >= s.size(); }

    static bool is_name_start(char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
    }
};

}  // namespace impl

// Builds a DomDocument from possibly-malformed HTML bytes. Never throws on
// bad input.
inline DomDocument parse_html(std::string_view bytes,
                              EncodingHint hint = EncodingHint::Auto) {
    std::string transcoded;
    if (hint == EncodingHint::Latin1) {
        transcoded = impl::latin1_to_utf8(bytes);
        bytes = transcoded;
    }

    DomDocument::Builder builder;
    std::vector<NodeId> stack;  // open elements, innermost last
    stack.push_back(0);

    auto flush_text = [&](std::string_view raw, bool decode) {
        if (raw.empty()) return;
        std::string text = decode ? impl::decode_entities(raw) : std::string(raw);
        // merge with a preceding text sibling so comment removal cannot
        // split one logical text run into two nodes
        const auto& siblings = builder.doc.node(stack.back()).children;
        if (!siblings.empty()) {
            Node& last = builder.node_mut(siblings.back());
            if (last.kind == Node::Kind::Text) {
                last.text += text;
                return;
            }
        }
        Node t;
        t.kind = Node::Kind::Text;
        t.text = std::move(text);
        builder.add(std::move(t), stack.back());
    };

    std::string_view s = bytes;
    size_t i = 0;
    size_t text_start = 0;
    while (i < s.size()) {
        if (s[i] != '<') {
            ++i;
            continue;
        }
        // comments / doctype / processing instructions
        if (s.compare(i, 4, "<!--") == 0) {
            flush_text(s.substr(text_start, i - text_start), true);
            size_t end = s.find("-->", i + 4);
            i = end == std::string_view::npos ? s.size() : end + 3;
            text_start = i;
            continue;
        }
        if (i + 1 < s.size() && (s[i + 1] == '!' || s[i + 1] == '?')) {
            flush_text(s.substr(text_start, i - text_start), true);
            size_t end = s.find('>', i + 1);
            i = end == std::string_view::npos ? s.size() : end + 1;
            text_start = i;
            continue;
        }
        bool closing = i + 1 < s.size() && s[i + 1] == '/';
        size_t name_at = i + (closing ? 2 : 1);
        if (name_at >= s.size() || !impl::Tokenizer::is_name_start(s[name_at])) {
            ++i;  // literal '<' in text
            continue;
        }
        flush_text(s.substr(text_start, i - text_start), true);

        size_t j = name_at;
        while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\n' &&
               s[j] != '\r' && s[j] != '\f' && s[j] != '/' && s[j] != '>')
            ++j;
        std::string tag = detail::to_lower_ascii(s.substr(name_at, j - name_at));

        if (closing) {
            size_t end = s.find('>', j);
            i = end == std::string_view::npos ? s.size() : end + 1;
            text_start = i;
            // pop to the nearest matching open element; ignore if unmatched
            for (size_t k = stack.size(); k-- > 1;) {
                if (builder.doc.node(stack[k]).tag == tag) {
                    stack.resize(k);
                    break;
                }
            }
            continue;
        }

        // attributes
        Node el;
        el.kind = Node::Kind::Element;
        el.tag = tag;
        while (j < s.size() && s[j] != '>') {
            while (j < s.size() && (detail::is_space(s[j]) || s[j] == '/')) ++j;
            if (j >= s.size() || s[j] == '>') break;
            size_t astart = j;
            while (j < s.size() && !detail::is_space(s[j]) && s[j] != '=' &&
                   s[j] != '>' && s[j] != '/')
                ++j;
            std::string name = detail::to_lower_ascii(s.substr(astart, j - astart));
            std::string value;
            while (j < s.size() && detail::is_space(s[j])) ++j;
            if (j < s.size() && s[j] == '=') {
                ++j;
                while (j < s.size() && detail::is_space(s[j])) ++j;
                if (j < s.size() && (s[j] == '"' || s[j] == '\'')) {
                    char q = s[j++];
                    size_t vstart = j;
                    while (j < s.size() && s[j] != q) ++j;
                    value = impl::decode_entities(s.substr(vstart, j - vstart));
                    if (j < s.size()) ++j;
                } else {
                    size_t vstart = j;
                    while (j < s.size() && !detail::is_space(s[j]) && s[j] != '>') ++j;
                    value = impl::decode_entities(s.substr(vstart, j - vstart));
                }
            }
            if (!name.empty() && !el.attr(name))
                el.attrs.emplace_back(std::move(name), std::move(value));
        }
        i = j < s.size() ? j + 1 : s.size();
        text_start = i;

        bool is_void = impl::is_void_tag(tag);
        NodeId id = builder.add(std::move(el), stack.back());
        if (impl::is_raw_text_tag(tag)) {
            // swallow raw text until the matching close tag
            std::string close = "</" + tag;
            size_t end = i;
            while (true) {
                end = s.find('<', end);
                if (end == std::string_view::npos) {
                    end = s.size();
                    break;
                }
                if (end + close.size() <= s.size() &&
                    detail::ieq_ascii(s.substr(end, close.size()), close)) {
                    break;
                }
                ++end;
            }
            if (end > i) {
                Node t;
                t.kind = Node::Kind::Text;
                t.text = std::string(s.substr(i, end - i));
                builder.add(std::move(t), id);
            }
            size_t gt = s.find('>', end);
            i = gt == std::string_view::npos ? s.size() : gt + 1;
            text_start = i;
        } else if (!is_void) {
            stack.push_back(id);
        }
    }
    flush_text(s.substr(text_start), true);
    return builder.finish();
}

namespace impl {

inline void serialize_node(const DomDocument& doc, NodeId id, std::string& out) {
    const Node& n = doc.node(id);
    if (n.kind == Node::Kind::Text) {
        const Node& p = doc.node(n.parent);
        if (p.kind == Node::Kind::Element && is_raw_text_tag(p.tag))
            out += n.text;
        else
            escape_text(n.text, out);
        return;
    }
    out.push_back('<');
    out += n.tag;
    for (const auto& [k, v] : n.attrs) {
        out.push_back(' ');
        out += k;
        out += "=\"";
        escape_attr(v, out);
        out.push_back('"');
    }
    out.push_back('>');
    if (is_void_tag(n.tag)) return;
    for (NodeId c : n.children) serialize_node(doc, c, out);
    out += "</";
    out += n.tag;
    out.push_back('>');
}

}  // namespace impl

// Serialization of the node's children (innerHTML semantics). Re-escapes
// what the parser decoded, so parse(serialize(...)) is tree-isomorphic.
inline std::string inner_html(const DomDocument& doc, NodeId id) {
    std::string out;
    for (NodeId c : doc.node(id).children) impl::serialize_node(doc, c, out);
    return out;
}

// Serialization including the node itself (outerHTML semantics).
inline std::string outer_html(const DomDocument& doc, NodeId id) {
    std::string out;
    impl::serialize_node(doc, id, out);
    return out;
}

inline std::string serialize(const DomDocument& doc) { return inner_html(doc, doc.root()); }

// Concatenated text content of the subtree, one space between adjacent text
// nodes. This is the word-counting substrate downstream.
inline std::string text_content(const DomDocument& doc, NodeId id) {
    std::string out;
    auto walk = [&](auto&& self, NodeId cur) -> void {
        const Node& n = doc.node(cur);
        if (n.kind == Node::Kind::Text) {
            if (!out.empty()) out.push_back(' ');
            out += n.text;
            return;
        }
        if (impl::is_raw_text_tag(n.tag)) return;
        for (NodeId c : n.children) self(self, c);
    };
    walk(walk, id);
    return out;
}

}  // namespace noticescope::domquery
