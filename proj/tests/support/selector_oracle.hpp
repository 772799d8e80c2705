#pragma once

// Brute-force selector-matching oracle, independent of the engine in
// query.hpp: every node is tested by direct predicate evaluation, walking
// all ancestor chains explicitly. No document indexes, no candidate
// pruning. Kept deliberately naive.

#include <string>
#include <string_view>
#include <vector>

#include "noticescope/html.hpp"
#include "noticescope/selector.hpp"

namespace testsupport {

using noticescope::domquery::AttrTest;
using noticescope::domquery::Combinator;
using noticescope::domquery::ComplexSelector;
using noticescope::domquery::CompoundSelector;
using noticescope::domquery::DomDocument;
using noticescope::domquery::kNoNode;
using noticescope::domquery::Node;
using noticescope::domquery::NodeId;
using noticescope::domquery::SelectorAst;
using noticescope::domquery::SimpleSelector;

inline const std::string* oracle_attr(const Node& n, std::string_view name) {
    for (const auto& kv : n.attrs)
        if (kv.first == name) return &kv.second;
    return nullptr;
}

inline bool oracle_has_class(const Node& n, const std::string& cls) {
    const std::string* v = oracle_attr(n, "class");
    if (!v) return false;
    std::string cur;
    std::vector<std::string> parts;
    for (char c : *v) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v') {
            if (!cur.empty()) parts.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) parts.push_back(cur);
    for (const auto& p : parts)
        if (p == cls) return true;
    return false;
}

inline bool oracle_attr_test(const Node& n, const AttrTest& t) {
    const std::string* v = oracle_attr(n, t.name);
    if (!v) return false;
    if (t.op == AttrTest::Op::Exists) return true;
    if (t.value.empty()) return t.op == AttrTest::Op::Equals && v->empty();
    switch (t.op) {
        case AttrTest::Op::Equals: return *v == t.value;
        case AttrTest::Op::Prefix:
            return v->size() >= t.value.size() && v->substr(0, t.value.size()) == t.value;
        case AttrTest::Op::Suffix:
            return v->size() >= t.value.size() &&
                   v->substr(v->size() - t.value.size()) == t.value;
        case AttrTest::Op::Contains: return v->find(t.value) != std::string::npos;
        default: return false;
    }
}

inline bool oracle_simple(const Node& n, const SimpleSelector& s) {
    switch (s.kind) {
        case SimpleSelector::Kind::Type: return n.tag == s.name;
        case SimpleSelector::Kind::Id: {
            const std::string* v = oracle_attr(n, "id");
            return v && *v == s.name;
        }
        case SimpleSelector::Kind::Class: return oracle_has_class(n, s.name);
        case SimpleSelector::Kind::Attr: return oracle_attr_test(n, s.attr);
    }
    return false;
}

inline bool oracle_compound(const DomDocument& doc, NodeId id, const CompoundSelector& c) {
    const Node& n = doc.node(id);
    if (n.kind != Node::Kind::Element || id == doc.root()) return false;
    if (c.type && n.tag != *c.type) return false;
    if (c.id) {
        const std::string* v = oracle_attr(n, "id");
        if (!v || *v != *c.id) return false;
    }
    for (const auto& cls : c.classes)
        if (!oracle_has_class(n, cls)) return false;
    for (const auto& t : c.attrs)
        if (!oracle_attr_test(n, t)) return false;
    for (const auto& neg : c.negations)
        if (oracle_simple(n, neg)) return false;
    return true;
}

// Enumerates every assignment of the left compounds to ancestors.
inline bool oracle_complex(const DomDocument& doc, NodeId id, const ComplexSelector& sel,
                           size_t idx) {
    if (!oracle_compound(doc, id, sel.compounds[idx])) return false;
    if (idx == 0) return true;
    std::vector<NodeId> ancestors;
    for (NodeId a = doc.node(id).parent; a != kNoNode; a = doc.node(a).parent)
        ancestors.push_back(a);
    if (sel.combinators[idx - 1] == Combinator::Child) {
        if (ancestors.empty()) return false;
        return oracle_complex(doc, ancestors.front(), sel, idx - 1);
    }
    for (NodeId a : ancestors)
        if (oracle_complex(doc, a, sel, idx - 1)) return true;
    return false;
}

inline std::vector<NodeId> oracle_query(const DomDocument& doc, const SelectorAst& sel) {
    std::vector<NodeId> out;
    for (NodeId id = 0; id < static_cast<NodeId>(doc.node_count()); ++id) {
        bool hit = false;
        for (const auto& alt : sel.alternatives)
            if (oracle_complex(doc, id, alt, alt.compounds.size() - 1)) hit = true;
        if (hit) out.push_back(id);
    }
    return out;  // ascending NodeId == document order, no duplicates by construction
}

}  // namespace testsupport
