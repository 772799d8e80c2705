#pragma once

// Selector evaluation over a DomDocument and the banner-matching entry
// point that joins a filter RuleSet with a parsed page.

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "noticescope/filterlist.hpp"
#include "noticescope/html.hpp"
#include "noticescope/selector.hpp"

namespace noticescope::domquery {

namespace impl {

inline bool attr_test_matches(const DomDocument& doc, NodeId id, const AttrTest& t) {
    const std::string* v = doc.node(id).attr(t.name);
    if (!v) return false;
    switch (t.op) {
        case AttrTest::Op::Exists: return true;
        case AttrTest::Op::Equals: return *v == t.value;
        case AttrTest::Op::Prefix:
            return !t.value.empty() && std::string_view(*v).starts_with(t.value);
        case AttrTest::Op::Suffix:
            return !t.value.empty() && std::string_view(*v).ends_with(t.value);
        case AttrTest::Op::Contains:
            return !t.value.empty() && v->find(t.value) != std::string::npos;
    }
    return false;
}

inline bool simple_matches(const DomDocument& doc, NodeId id, const SimpleSelector& s) {
    const Node& n = doc.node(id);
    switch (s.kind) {
        case SimpleSelector::Kind::Type: return n.tag == s.name;
        case SimpleSelector::Kind::Id: {
            const std::string* v = n.attr("id");
            return v && *v == s.name;
        }
        case SimpleSelector::Kind::Class: return doc.element_has_class(id, s.name);
        case SimpleSelector::Kind::Attr: return attr_test_matches(doc, id, s.attr);
    }
    return false;
}

inline bool compound_matches(const DomDocument& doc, NodeId id, const CompoundSelector& c) {
    const Node& n = doc.node(id);
    if (n.kind != Node::Kind::Element || n.tag == "#root") return false;
    if (c.type && n.tag != *c.type) return false;
    if (c.id) {
        const std::string* v = n.attr("id");
        if (!v || *v != *c.id) return false;
    }
    for (const auto& cls : c.classes)
        if (!doc.element_has_class(id, cls)) return false;
    for (const auto& t : c.attrs)
        if (!attr_test_matches(doc, id, t)) return false;
    for (const auto& neg : c.negations)
        if (simple_matches(doc, id, neg)) return false;
    return true;
}

// Matches compounds[0..idx] with compounds[idx] anchored at `id`,
// backtracking through ancestors for descendant combinators.
inline bool complex_matches_upward(const DomDocument& doc, NodeId id,
                                   const ComplexSelector& sel, size_t idx) {
    if (!compound_matches(doc, id, sel.compounds[idx])) return false;
    if (idx == 0) return true;
    Combinator comb = sel.combinators[idx - 1];
    NodeId parent = doc.node(id).parent;
    if (comb == Combinator::Child) {
        return parent != kNoNode && complex_matches_upward(doc, parent, sel, idx - 1);
    }
    for (NodeId anc = parent; anc != kNoNode; anc = doc.node(anc).parent)
        if (complex_matches_upward(doc, anc, sel, idx - 1)) return true;
    return false;
}

// Narrowest candidate set for the rightmost compound, using the document
// indexes. Falls back to all elements.
inline const std::vector<NodeId>* candidates(const DomDocument& doc,
                                             const CompoundSelector& c,
                                             const std::vector<NodeId>& all) {
    if (c.id) {
        const auto* v = doc.by_id(*c.id);
        static const std::vector<NodeId> kEmpty;
        return v ? v : &kEmpty;
    }
    if (!c.classes.empty()) {
        const auto* v = doc.by_class(c.classes.front());
        static const std::vector<NodeId> kEmpty;
        return v ? v : &kEmpty;
    }
    if (c.type) {
        const auto* v = doc.by_tag(*c.type);
        static const std::vector<NodeId> kEmpty;
        return v ? v : &kEmpty;
    }
    return &all;
}

}  // namespace impl

// True when the element matches any alternative of the selector.
inline bool matches(const DomDocument& doc, NodeId id, const SelectorAst& sel) {
    for (const auto& alt : sel.alternatives)
        if (impl::complex_matches_upward(doc, id, alt, alt.compounds.size() - 1))
            return true;
    return false;
}

// All matching elements in document order, no duplicates.
inline std::vector<NodeId> query(const DomDocument& doc, const SelectorAst& sel) {
    std::vector<NodeId> out;
    for (const auto& alt : sel.alternatives) {
        const auto* cand = impl::candidates(doc, alt.compounds.back(), doc.elements());
        for (NodeId id : *cand)
            if (impl::complex_matches_upward(doc, id, alt, alt.compounds.size() - 1))
                out.push_back(id);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Rendered box for an element, in CSS pixels.
struct LayoutBox {
    int x = 0;
    int y = 0;
    int width = 0;
    int height = 0;
};

// Supplied by a browser-backed harness when real rendered geometry is
// available; the static fetch path runs without one.
class LayoutProvider {
  public:
    virtual ~LayoutProvider() = default;
    virtual std::optional<LayoutBox> box_for(NodeId id) const = 0;
};

struct BannerMatch {
    NodeId node_id = kNoNode;
    std::string selector_text;  // first selector (in rule order) that hit
    std::optional<int> height_px;
    std::optional<int> width_px;
    std::optional<int> offset_x;
    std::optional<int> offset_y;
    std::string inner_html;
    // true when an ancestor carries an inline display:none
    bool has_hidden_ancestor_hint = false;
};

struct MatchStats {
    size_t selectors_total = 0;
    size_t selectors_unsupported = 0;
    std::map<std::string, size_t> unsupported_reasons;
};

namespace impl {

// "height:120px" / "min-height: 80px" out of an inline style attribute;
// plain height wins over min-height.
inline std::optional<int> static_height_from_style(std::string_view style) {
    std::optional<int> height, min_height;
    for (auto decl : detail::split(style, ';')) {
        size_t colon = decl.find(':');
        if (colon == std::string_view::npos) continue;
        std::string prop = detail::to_lower_ascii(detail::trim(decl.substr(0, colon)));
        std::string_view value = detail::trim(decl.substr(colon + 1));
        if (prop != "height" && prop != "min-height") continue;
        if (!value.ends_with("px")) continue;
        auto n = detail::parse_int(detail::trim(value.substr(0, value.size() - 2)));
        if (!n || *n < 0) continue;
        (prop == "height" ? height : min_height) = static_cast<int>(*n);
    }
    return height ? height : min_height;
}

inline bool style_has_display_none(std::string_view style) {
    for (auto decl : detail::split(style, ';')) {
        size_t colon = decl.find(':');
        if (colon == std::string_view::npos) continue;
        if (detail::to_lower_ascii(detail::trim(decl.substr(0, colon))) != "display") continue;
        if (detail::to_lower_ascii(detail::trim(decl.substr(colon + 1))) == "none") return true;
    }
    return false;
}

}  // namespace impl

// Evaluates every selector the rule set resolves for `domain` against the
// page, one BannerMatch per distinct element (first matching selector
// wins), sorted by node id. Geometry comes from `layout` when given, else
// from inline style height, else stays Unknown.
inline std::vector<BannerMatch> match_banners(const DomDocument& doc,
                                              const filterlist::RuleSet& rules,
                                              std::string_view domain,
                                              const LayoutProvider* layout = nullptr,
                                              MatchStats* stats = nullptr) {
    std::vector<std::string> selectors = filterlist::rules_for_domain(rules, domain);
    std::map<NodeId, std::string> hits;  // node -> first selector text
    MatchStats local;
    for (const auto& text : selectors) {
        local.selectors_total++;
        SelectorParse parsed = parse_selector(text);
        if (const auto* unsupported = std::get_if<Unsupported>(&parsed)) {
            local.selectors_unsupported++;
            local.unsupported_reasons[unsupported->reason]++;
            continue;
        }
        for (NodeId id : query(doc, std::get<SelectorAst>(parsed)))
            hits.try_emplace(id, text);
    }
    if (stats) *stats = std::move(local);

    std::vector<BannerMatch> out;
    out.reserve(hits.size());
    for (const auto& [id, selector_text] : hits) {
        BannerMatch m;
        m.node_id = id;
        m.selector_text = selector_text;
        m.inner_html = inner_html(doc, id);
        if (layout) {
            if (auto box = layout->box_for(id)) {
                m.height_px = box->height;
                m.width_px = box->width;
                m.offset_x = box->x;
                m.offset_y = box->y;
            }
        }
        if (!m.height_px) {
            if (const std::string* style = doc.node(id).attr("style"))
                m.height_px = impl::static_height_from_style(*style);
        }
        for (NodeId anc = doc.node(id).parent; anc != kNoNode; anc = doc.node(anc).parent) {
            const std::string* style = doc.node(anc).attr("style");
            if (style && impl::style_has_display_none(*style)) {
                m.has_hidden_ancestor_hint = true;
                break;
            }
        }
        out.push_back(std::move(m));
    }
    return out;
}

}  // namespace noticescope::domquery
