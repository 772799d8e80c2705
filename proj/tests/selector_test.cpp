#include "noticescope/selector.hpp"

#include <random>

#include <gtest/gtest.h>

#include "noticescope/query.hpp"
#include "support/random_dom.hpp"
#include "support/selector_oracle.hpp"

namespace dq = noticescope::domquery;
namespace fl = noticescope::filterlist;
using dq::AttrTest;
using dq::SelectorAst;
using dq::Unsupported;

namespace {

SelectorAst parse_ok(std::string_view text) {
    auto parsed = dq::parse_selector(text);
    auto* ast = std::get_if<SelectorAst>(&parsed);
    EXPECT_NE(ast, nullptr) << text << " -> "
                            << (ast ? "" : std::get<Unsupported>(parsed).reason);
    return ast ? *ast : SelectorAst{};
}

std::string unsupported_reason(std::string_view text) {
    auto parsed = dq::parse_selector(text);
    auto* u = std::get_if<Unsupported>(&parsed);
    EXPECT_NE(u, nullptr) << text << " unexpectedly parsed";
    return u ? u->reason : "";
}

}  // namespace

TEST(ParseSelector, IdCompound) {
    auto ast = parse_ok("#cookieNotice");
    ASSERT_EQ(ast.alternatives.size(), 1u);
    const auto& complexsel = ast.alternatives[0];
    ASSERT_EQ(complexsel.compounds.size(), 1u);
    EXPECT_EQ(complexsel.compounds[0].id, "cookieNotice");
    EXPECT_FALSE(complexsel.compounds[0].type);
}

TEST(ParseSelector, ChildCombinatorAndAttrPrefix) {
    auto ast = parse_ok("div.x > a[href^='http']");
    const auto& sel = ast.alternatives[0];
    ASSERT_EQ(sel.compounds.size(), 2u);
    ASSERT_EQ(sel.combinators.size(), 1u);
    EXPECT_EQ(sel.combinators[0], dq::Combinator::Child);
    EXPECT_EQ(sel.compounds[0].type, "div");
    EXPECT_EQ(sel.compounds[0].classes, std::vector<std::string>{"x"});
    EXPECT_EQ(sel.compounds[1].type, "a");
    ASSERT_EQ(sel.compounds[1].attrs.size(), 1u);
    EXPECT_EQ(sel.compounds[1].attrs[0].op, AttrTest::Op::Prefix);
    EXPECT_EQ(sel.compounds[1].attrs[0].value, "http");
}

TEST(ParseSelector, TagCaseFoldedValuesKept) {
    auto ast = parse_ok("DIV[Data-Role=\"Consent\"]#MyId.MyClass");
    const auto& c = ast.alternatives[0].compounds[0];
    EXPECT_EQ(c.type, "div");
    EXPECT_EQ(c.attrs[0].name, "data-role");
    EXPECT_EQ(c.attrs[0].value, "Consent");
    EXPECT_EQ(c.id, "MyId");
    EXPECT_EQ(c.classes[0], "MyClass");
}

TEST(ParseSelector, Grouping) {
    auto ast = parse_ok("#a, .b, div span");
    ASSERT_EQ(ast.alternatives.size(), 3u);
    EXPECT_EQ(ast.alternatives[2].compounds.size(), 2u);
    EXPECT_EQ(ast.alternatives[2].combinators[0], dq::Combinator::Descendant);
}

TEST(ParseSelector, NotWithSimpleArgument) {
    auto ast = parse_ok("div:not(.keep):not(#x):not([hidden])");
    const auto& c = ast.alternatives[0].compounds[0];
    ASSERT_EQ(c.negations.size(), 3u);
    EXPECT_EQ(c.negations[0].kind, dq::SimpleSelector::Kind::Class);
    EXPECT_EQ(c.negations[1].kind, dq::SimpleSelector::Kind::Id);
    EXPECT_EQ(c.negations[2].kind, dq::SimpleSelector::Kind::Attr);
}

TEST(ParseSelector, UnsupportedClasses) {
    EXPECT_EQ(unsupported_reason("::before"), "pseudo_element");
    EXPECT_EQ(unsupported_reason(".x::after"), "pseudo_element");
    EXPECT_EQ(unsupported_reason("li:nth-child(2)"), "pseudo_class_nth");
    EXPECT_EQ(unsupported_reason("a:hover"), "pseudo_class_hover");
    EXPECT_EQ(unsupported_reason("a + b"), "sibling_combinator");
    EXPECT_EQ(unsupported_reason("a ~ b"), "sibling_combinator");
    EXPECT_EQ(unsupported_reason("div:not(div span)"), "not_argument_not_simple");
    EXPECT_EQ(unsupported_reason("[a|=b]"), "attr_op_unsupported");
    EXPECT_EQ(unsupported_reason(""), "empty_selector");
    EXPECT_EQ(unsupported_reason("div >"), "empty_compound");
}

TEST(Query, IdLookup) {
    auto doc = dq::parse_html("<div id=\"cookieNotice\">x</div>");
    auto got = dq::query(doc, parse_ok("#cookieNotice"));
    ASSERT_EQ(got.size(), 1u);
    EXPECT_EQ(doc.node(got[0]).tag, "div");
}

TEST(Query, EmptyDocument) {
    auto doc = dq::parse_html("");
    EXPECT_TRUE(dq::query(doc, parse_ok("#x")).empty());
    EXPECT_TRUE(dq::query(doc, parse_ok("div")).empty());
}

TEST(Query, DocumentOrderNoDuplicates) {
    auto doc = dq::parse_html("<div class=\"x\"><p class=\"x y\">a</p></div><b class=x>c</b>");
    auto got = dq::query(doc, parse_ok(".x, .y, p.x"));
    ASSERT_EQ(got.size(), 3u);
    EXPECT_LT(got[0], got[1]);
    EXPECT_LT(got[1], got[2]);
}

TEST(Query, DescendantVsChild) {
    auto doc = dq::parse_html("<div id=o><section><p id=deep>t</p></section><p id=kid>u</p></div>");
    auto desc = dq::query(doc, parse_ok("div p"));
    EXPECT_EQ(desc.size(), 2u);
    auto child = dq::query(doc, parse_ok("div > p"));
    ASSERT_EQ(child.size(), 1u);
    EXPECT_EQ(*doc.node(child[0]).attr("id"), "kid");
}

TEST(Query, AttributeOps) {
    auto doc = dq::parse_html(
        "<a href=\"https://e.org/x\">1</a><a href=\"http://e.com\">2</a><a>3</a>");
    EXPECT_EQ(dq::query(doc, parse_ok("a[href]")).size(), 2u);
    EXPECT_EQ(dq::query(doc, parse_ok("a[href^=\"https\"]")).size(), 1u);
    EXPECT_EQ(dq::query(doc, parse_ok("a[href$=\".com\"]")).size(), 1u);
    EXPECT_EQ(dq::query(doc, parse_ok("a[href*=\"e.\"]")).size(), 2u);
    EXPECT_EQ(dq::query(doc, parse_ok("a[href=\"http://e.com\"]")).size(), 1u);
}

TEST(Query, CaseSensitivityOfValues) {
    auto doc = dq::parse_html("<div id=\"Cookie\" class=\"Bar\"></div>");
    EXPECT_TRUE(dq::query(doc, parse_ok("#cookie")).empty());
    EXPECT_EQ(dq::query(doc, parse_ok("#Cookie")).size(), 1u);
    EXPECT_TRUE(dq::query(doc, parse_ok(".bar")).empty());
    EXPECT_EQ(dq::query(doc, parse_ok(".Bar")).size(), 1u);
    EXPECT_EQ(dq::query(doc, parse_ok("DIV")).size(), 1u);  // tags fold
}

TEST(Query, GroupEqualsOrderedUnion) {
    std::mt19937 rng(21);
    for (int i = 0; i < 100; ++i) {
        auto doc = dq::parse_html(testsupport::random_html(rng, 30));
        std::string a = testsupport::random_selector_text(rng);
        std::string b = testsupport::random_selector_text(rng);
        auto pa = dq::parse_selector(a);
        auto pb = dq::parse_selector(b);
        auto pg = dq::parse_selector(a + ", " + b);
        if (!std::holds_alternative<SelectorAst>(pa) ||
            !std::holds_alternative<SelectorAst>(pb) ||
            !std::holds_alternative<SelectorAst>(pg))
            continue;
        auto ra = dq::query(doc, std::get<SelectorAst>(pa));
        auto rb = dq::query(doc, std::get<SelectorAst>(pb));
        std::vector<dq::NodeId> unioned(ra);
        unioned.insert(unioned.end(), rb.begin(), rb.end());
        std::sort(unioned.begin(), unioned.end());
        unioned.erase(std::unique(unioned.begin(), unioned.end()), unioned.end());
        EXPECT_EQ(dq::query(doc, std::get<SelectorAst>(pg)), unioned) << a << " , " << b;
    }
}

TEST(Query, PureAndDeterministic) {
    auto doc = dq::parse_html("<div class=x><p class=x>a</p></div>");
    auto sel = parse_ok(".x");
    EXPECT_EQ(dq::query(doc, sel), dq::query(doc, sel));
}

TEST(Query, MatchesBruteForceOracle) {
    std::mt19937 rng(33);
    int checked = 0;
    for (int d = 0; d < 200; ++d) {
        auto doc = dq::parse_html(testsupport::random_html(rng, 35));
        for (int s = 0; s < 20; ++s) {
            std::string text = testsupport::random_selector_text(rng);
            auto parsed = dq::parse_selector(text);
            auto* ast = std::get_if<SelectorAst>(&parsed);
            ASSERT_NE(ast, nullptr) << text;
            ASSERT_EQ(dq::query(doc, *ast), testsupport::oracle_query(doc, *ast)) << text;
            ++checked;
        }
    }
    EXPECT_EQ(checked, 200 * 20);
}

TEST(MatchBanners, SingleGenericRule) {
    auto rules = fl::load_list("###cookieNotice\n");
    auto doc = dq::parse_html("<div id=\"cookieNotice\"><p>We use cookies</p></div>");
    auto got = dq::match_banners(doc, rules, "example.com");
    ASSERT_EQ(got.size(), 1u);
    EXPECT_EQ(got[0].selector_text, "#cookieNotice");
    EXPECT_EQ(got[0].inner_html, "<p>We use cookies</p>");
    EXPECT_FALSE(got[0].height_px.has_value());
}

TEST(MatchBanners, NestedElementsBothReported) {
    auto rules = fl::load_list("##.cookie-outer\n##.cookie-inner\n");
    auto doc = dq::parse_html(
        "<div class=\"cookie-outer\"><div class=\"cookie-inner\">t</div></div>");
    auto got = dq::match_banners(doc, rules, "example.com");
    EXPECT_EQ(got.size(), 2u);  // consolidation happens downstream
}

TEST(MatchBanners, DedupByNodeKeepsFirstSelector) {
    auto rules = fl::load_list("###bar\n##.bar-cls\n");
    auto doc = dq::parse_html("<div id=\"bar\" class=\"bar-cls\">t</div>");
    auto got = dq::match_banners(doc, rules, "example.com");
    ASSERT_EQ(got.size(), 1u);
    EXPECT_EQ(got[0].selector_text, "#bar");
}

TEST(MatchBanners, StaticHeightFallbackFromInlineStyle) {
    auto rules = fl::load_list("###a\n###b\n###c\n");
    auto doc = dq::parse_html(
        "<div id=a style=\"height: 120px\">x</div>"
        "<div id=b style=\"min-height:55px; color:red\">y</div>"
        "<div id=c style=\"height:30%\">z</div>");
    auto got = dq::match_banners(doc, rules, "example.com");
    ASSERT_EQ(got.size(), 3u);
    EXPECT_EQ(got[0].height_px, 120);
    EXPECT_EQ(got[1].height_px, 55);
    EXPECT_FALSE(got[2].height_px.has_value());  // only px units
    EXPECT_FALSE(got[0].width_px.has_value());   // static path has no widths
}

namespace {
class FixedLayout : public dq::LayoutProvider {
  public:
    std::optional<dq::LayoutBox> box_for(dq::NodeId) const override {
        return dq::LayoutBox{3, 7, 800, 90};
    }
};
}  // namespace

TEST(MatchBanners, LayoutProviderWinsOverStyle) {
    auto rules = fl::load_list("###a\n");
    auto doc = dq::parse_html("<div id=a style=\"height:10px\">x</div>");
    FixedLayout layout;
    auto got = dq::match_banners(doc, rules, "example.com", &layout);
    ASSERT_EQ(got.size(), 1u);
    EXPECT_EQ(got[0].height_px, 90);
    EXPECT_EQ(got[0].width_px, 800);
    EXPECT_EQ(got[0].offset_x, 3);
    EXPECT_EQ(got[0].offset_y, 7);
}

TEST(MatchBanners, HiddenAncestorHint) {
    auto rules = fl::load_list("###a\n###b\n");
    auto doc = dq::parse_html(
        "<div style=\"display: none\"><div id=a>x</div></div><div id=b>y</div>");
    auto got = dq::match_banners(doc, rules, "example.com");
    ASSERT_EQ(got.size(), 2u);
    EXPECT_TRUE(got[0].has_hidden_ancestor_hint);
    EXPECT_FALSE(got[1].has_hidden_ancestor_hint);
}

TEST(MatchBanners, UnsupportedSelectorsCountedNotGuessed) {
    auto rules = fl::load_list("##.x::before\n###ok\n##.y:hover\n");
    auto doc = dq::parse_html("<div id=ok>t</div>");
    dq::MatchStats stats;
    auto got = dq::match_banners(doc, rules, "example.com", nullptr, &stats);
    EXPECT_EQ(got.size(), 1u);
    EXPECT_EQ(stats.selectors_total, 3u);
    EXPECT_EQ(stats.selectors_unsupported, 2u);
    EXPECT_EQ(stats.unsupported_reasons.at("pseudo_element"), 1u);
}

TEST(MatchBanners, ScopedRulesRespectDomain) {
    auto rules = fl::load_list("nu.nl##.bar\n");
    auto doc = dq::parse_html("<div class=bar>t</div>");
    EXPECT_EQ(dq::match_banners(doc, rules, "www.nu.nl").size(), 1u);
    EXPECT_TRUE(dq::match_banners(doc, rules, "menu.nl").empty());
}
