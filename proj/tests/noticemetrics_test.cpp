#include "noticescope/noticemetrics.hpp"

#include <algorithm>
#include <random>

#include <gtest/gtest.h>

namespace nm = noticescope::noticemetrics;
namespace dq = noticescope::domquery;
using noticescope::harvest::CookieRecord;

namespace {

dq::BannerMatch match_with(std::optional<int> height, std::string inner_html) {
    dq::BannerMatch m;
    m.height_px = height;
    m.inner_html = std::move(inner_html);
    return m;
}

std::string repeat_words(int n) {
    std::string out;
    for (int i = 0; i < n; ++i) {
        if (i) out += " ";
        out += "w" + std::to_string(i);
    }
    return out;
}

}  // namespace

TEST(Consolidate, TallestHeightAndLongestText) {
    std::vector<dq::BannerMatch> matches = {
        match_with(40, repeat_words(5)),
        match_with(120, repeat_words(31)),
        match_with(80, repeat_words(10)),
    };
    auto c = nm::consolidate(matches);
    EXPECT_EQ(c.height_px, 120);
    EXPECT_EQ(c.word_count, 31);
    EXPECT_EQ(c.match_count, 3);
}

TEST(Consolidate, SingleMatchIdentity) {
    std::vector<dq::BannerMatch> matches = {
        match_with(55, "<p>three little words</p><a href=\"/x\">go</a>")};
    auto c = nm::consolidate(matches);
    EXPECT_EQ(c.height_px, 55);
    EXPECT_EQ(c.word_count, 4);
    EXPECT_EQ(c.link_count, 1);
}

// The two maxima are independent: height can come from one element and
// words/links from another.
TEST(Consolidate, TallestAndLongestDiffer) {
    std::vector<dq::BannerMatch> matches = {
        match_with(200, "<p>short text</p>"),
        match_with(30, "<p>" + repeat_words(20) + "</p><button>ok</button><button>no</button>"),
    };
    auto c = nm::consolidate(matches);
    EXPECT_EQ(c.height_px, 200);
    EXPECT_EQ(c.word_count, 22);  // includes the button labels
    EXPECT_EQ(c.link_count, 2);
}

TEST(Consolidate, EmptyInput) {
    auto c = nm::consolidate({});
    EXPECT_EQ(c.match_count, 0);
    EXPECT_FALSE(c.height_px.has_value());
    EXPECT_FALSE(c.word_count.has_value());
    EXPECT_FALSE(c.link_count.has_value());
    EXPECT_TRUE(c.inner_text.empty());
}

TEST(Consolidate, UnknownHeightsStayUnknown) {
    std::vector<dq::BannerMatch> matches = {match_with(std::nullopt, "<p>a b</p>"),
                                            match_with(std::nullopt, "<p>c</p>")};
    auto c = nm::consolidate(matches);
    EXPECT_FALSE(c.height_px.has_value());
    EXPECT_TRUE(c.word_count.has_value());
}

TEST(Consolidate, PermutationInvariant) {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<dq::BannerMatch> matches;
        int n = 1 + static_cast<int>(rng() % 5);
        for (int i = 0; i < n; ++i) {
            std::optional<int> h;
            if (rng() % 3) h = static_cast<int>(rng() % 300);
            matches.push_back(match_with(h, "<p>" + repeat_words(rng() % 6) + "</p>"));
        }
        auto base = nm::consolidate(matches);
        for (int shuffle = 0; shuffle < 5; ++shuffle) {
            std::shuffle(matches.begin(), matches.end(), rng);
            auto got = nm::consolidate(matches);
            EXPECT_EQ(got.height_px, base.height_px);
            EXPECT_EQ(got.word_count, base.word_count);
            EXPECT_EQ(got.link_count, base.link_count);
            EXPECT_EQ(got.inner_text, base.inner_text);
        }
    }
}

TEST(Consolidate, HeightMonotoneUnderTallerMatch) {
    std::vector<dq::BannerMatch> matches = {match_with(90, "<p>a</p>")};
    auto before = nm::consolidate(matches);
    matches.push_back(match_with(150, "<p>b</p>"));
    auto after = nm::consolidate(matches);
    EXPECT_GE(*after.height_px, *before.height_px);
}

TEST(CountWords, Basics) {
    EXPECT_EQ(nm::count_words("This website uses cookies"), 4);
    EXPECT_EQ(nm::count_words(""), 0);
    EXPECT_EQ(nm::count_words("   "), 0);
    EXPECT_EQ(nm::count_words("one"), 1);
    // NBSP is a word break
    EXPECT_EQ(nm::count_words("a\xc2\xa0"
                              "b"),
              2);
}

TEST(CountWords, ConcatenationAdds) {
    const char* samples[] = {"hello world", "x", "deze website gebruikt cookies",
                             "a  b   c"};
    for (const char* a : samples) {
        for (const char* b : samples) {
            EXPECT_EQ(nm::count_words(std::string(a) + " " + b),
                      nm::count_words(a) + nm::count_words(b));
        }
    }
}

// Hand-counted realistic banner fragments.
TEST(CountWords, BannerFixturesMatchHandCounts) {
    struct Case { const char* html; int words; };
    const Case cases[] = {
        {"<div>This website uses cookies to improve your experience. "
         "<a href=\"/privacy\">Learn more</a> <button>Accept</button></div>", 11},
        {"<p>Wij gebruiken cookies om u de beste ervaring te geven.</p>", 10},
        {"<div><span>Diese Website verwendet Cookies.</span><span>Mehr erfahren</span></div>", 6},
        {"<div>En poursuivant votre navigation, vous acceptez "
         "l&#39;utilisation de cookies.</div>", 9},
        {"<div>Accept &amp; close</div>", 3},
        {"<div>We use cookies &#8212; read our <a href='/cc'>cookie policy</a>.</div>", 9},
        {"<div>Questo sito utilizza i cookie per migliorare la tua esperienza</div>", 10},
        {"<div>  </div>", 0},
        {"<div>Ta strona u\xc5\xbcywa plik\xc3\xb3w cookies w celach statystycznych</div>", 8},
        // numeric NBSP decodes to U+00A0 and breaks words; the named form
        // is outside the decoded entity set and does not
        {"<div>Cookies&#160;help us deliver our services.</div>", 6},
        {"<div>Cookies&nbsp;help us deliver our services.</div>", 5},
    };
    for (const auto& c : cases)
        EXPECT_EQ(nm::count_words(nm::text_of_html(c.html)), c.words) << c.html;
}

TEST(CountLinks, LinkAndButton) {
    EXPECT_EQ(nm::count_links("<a href=\"/p\">policy</a><button>ok</button>"), 2);
}

TEST(CountLinks, NestedAnchorCountsOnce) {
    EXPECT_EQ(nm::count_links("<a href=\"/x\"><span>ok</span></a>"), 1);
}

TEST(CountLinks, PolicyAcceptRefuse) {
    // cookie-policy link, an accept button, and a refuse button
    EXPECT_EQ(nm::count_links("<p>We use cookies. <a href=\"/cookie-policy\">policy</a></p>"
                              "<button>Accept</button><button>Refuse</button>"),
              3);
}

TEST(CountLinks, InputsRolesAndDedup) {
    EXPECT_EQ(nm::count_links("<input type=submit><input type=\"BUTTON\"><input type=text>"), 2);
    EXPECT_EQ(nm::count_links("<span role=button>ok</span>"), 1);
    EXPECT_EQ(nm::count_links("<a>no href</a>"), 0);
    // one element matching several rules still counts once
    EXPECT_EQ(nm::count_links("<a href=\"/x\" role=\"button\">ok</a>"), 1);
}

TEST(DetectLanguage, EmptyAndShort) {
    EXPECT_EQ(nm::detect_language(""), "und");
    EXPECT_EQ(nm::detect_language("ok"), "und");
    EXPECT_EQ(nm::detect_language("accept cookies now"), "und");  // no stopword hits
}

TEST(DetectLanguage, KnownLanguages) {
    EXPECT_EQ(nm::detect_language("deze website gebruikt cookies om u de beste "
                                  "ervaring te geven"),
              "nl");
    EXPECT_EQ(nm::detect_language("this website uses cookies to improve your experience"),
              "en");
    EXPECT_EQ(nm::detect_language("diese Website verwendet Cookies, um Ihnen das beste "
                                  "Erlebnis zu bieten"),
              "de");
    EXPECT_EQ(nm::detect_language("ce site utilise des cookies pour vous garantir la "
                                  "meilleure exp\xc3\xa9rience"),
              "fr");
    EXPECT_EQ(nm::detect_language("este sitio web utiliza cookies para que usted tenga "
                                  "la mejor experiencia"),
              "es");
    EXPECT_EQ(nm::detect_language(
                  "\xce\xb1\xcf\x85\xcf\x84\xcf\x8c\xcf\x82 \xce\xbf "
                  "\xce\xb9\xcf\x83\xcf\x84\xcf\x8c\xcf\x84\xce\xbf\xcf\x80\xce\xbf\xcf\x82 "
                  "\xcf\x87\xcf\x81\xce\xb7\xcf\x83\xce\xb9\xce\xbc\xce\xbf\xcf\x80\xce\xbf"
                  "\xce\xb9\xce\xb5\xce\xaf cookies \xce\xb3\xce\xb9\xce\xb1 \xcf\x84\xce\xb7"
                  "\xce\xbd \xce\xba\xce\xb1\xce\xbb\xcf\x8d\xcf\x84\xce\xb5\xcf\x81\xce\xb7 "
                  "\xce\xb5\xce\xbc\xcf\x80\xce\xb5\xce\xb9\xcf\x81\xce\xaf\xce\xb1"),
              "el");
}

TEST(DetectLanguage, CapitalizedAndPunctuatedTokensStillHit) {
    EXPECT_EQ(nm::detect_language("Wij gebruiken cookies, en u kunt deze uitschakelen."), "nl");
}

TEST(RegistrableDomain, SnapshotCases) {
    EXPECT_EQ(nm::registrable_domain("sub.example.com"), "example.com");
    EXPECT_EQ(nm::registrable_domain("example.com"), "example.com");
    EXPECT_EQ(nm::registrable_domain("www.google.co.uk"), "google.co.uk");
    EXPECT_EQ(nm::registrable_domain("a.b.ck"), "a.b.ck");      // *.ck wildcard
    EXPECT_EQ(nm::registrable_domain("www.ck"), "www.ck");       // !www.ck exception
    EXPECT_EQ(nm::registrable_domain("x.www.ck"), "www.ck");
    EXPECT_EQ(nm::registrable_domain("deep.sub.nu.nl"), "nu.nl");
    EXPECT_EQ(nm::registrable_domain("tracker.ads.example.fr"), "example.fr");
    EXPECT_EQ(nm::registrable_domain("site.gouv.fr"), "site.gouv.fr");
}

TEST(RegistrableDomain, FallbackLastTwoLabels) {
    EXPECT_EQ(nm::registrable_domain("a.b.unknowntld"), "b.unknowntld");
    EXPECT_EQ(nm::registrable_domain("b.unknowntld"), "b.unknowntld");
}

TEST(RegistrableDomain, DegenerateHosts) {
    EXPECT_EQ(nm::registrable_domain("localhost"), "localhost");
    EXPECT_EQ(nm::registrable_domain("co.uk"), "co.uk");  // already a public suffix
    EXPECT_EQ(nm::registrable_domain(".example.com."), "example.com");
    EXPECT_EQ(nm::registrable_domain(""), "");
}

namespace {
CookieRecord cookie(std::string name, std::string domain, std::optional<int64_t> expires) {
    CookieRecord c;
    c.name = std::move(name);
    c.cookie_domain = std::move(domain);
    c.path = "/";
    c.expires = expires;
    return c;
}
}  // namespace

TEST(ThirdPartyPersistent, SessionCookieFromSiteItself) {
    std::vector<CookieRecord> cookies = {cookie("sid", "example.nl", std::nullopt)};
    EXPECT_EQ(nm::count_third_party_persistent(cookies, "example.nl", 1000), 0);
}

TEST(ThirdPartyPersistent, PersistentTracker) {
    std::vector<CookieRecord> cookies = {cookie("uid", "tracker.example", 5000)};
    EXPECT_EQ(nm::count_third_party_persistent(cookies, "site.nl", 1000), 1);
}

TEST(ThirdPartyPersistent, MixedSixCookieFixture) {
    // 2 session, 1 first-party persistent, 3 third-party persistent
    std::vector<CookieRecord> cookies = {
        cookie("s1", "site.nl", std::nullopt),
        cookie("s2", "ads.example", std::nullopt),
        cookie("fp", ".www.site.nl", 9000),
        cookie("t1", "ads.example", 9000),
        cookie("t2", "pixel.tracker.net", 9000),
        cookie("t3", ".metrics.io", 9000),
    };
    EXPECT_EQ(nm::count_third_party_persistent(cookies, "site.nl", 1000), 3);
}

TEST(ThirdPartyPersistent, ExpiredCookieNotPersistent) {
    std::vector<CookieRecord> cookies = {cookie("old", "ads.example", 500)};
    EXPECT_EQ(nm::count_third_party_persistent(cookies, "site.nl", 1000), 0);
}

TEST(BuildObservation, BannerAndMetrics) {
    noticescope::harvest::SiteEntry site{"nu.nl", "nl", 1};
    noticescope::harvest::VantagePoint vp{"NL", "", "nl-NL", true};
    std::vector<dq::BannerMatch> matches = {
        match_with(86, "<p>wij gebruiken cookies om u de beste ervaring te geven</p>"
                       "<a href=\"/cookies\">meer</a><button>akkoord</button>")};
    std::vector<CookieRecord> cookies = {cookie("t", "ads.example", 9000)};
    auto o = nm::build_observation(site, vp, matches, cookies, 1000);
    EXPECT_TRUE(o.banner_exists);
    EXPECT_EQ(o.match_count, 1);
    EXPECT_EQ(o.height_px, 86);
    EXPECT_EQ(o.word_count, 12);  // notice text plus link/button labels
    EXPECT_EQ(o.link_count, 2);
    EXPECT_EQ(o.language, "nl");
    EXPECT_EQ(o.third_party_persistent_cookies, 1);
    EXPECT_TRUE(o.vpn_eu);
}

TEST(BuildObservation, NoMatchesMeansNoBannerAndUnknownMetrics) {
    noticescope::harvest::SiteEntry site{"x.com", "com", 3};
    noticescope::harvest::VantagePoint vp{"US", "", "en-US", false};
    auto o = nm::build_observation(site, vp, {}, {}, 1000);
    EXPECT_FALSE(o.banner_exists);
    EXPECT_EQ(o.match_count, 0);
    EXPECT_FALSE(o.height_px.has_value());
    EXPECT_FALSE(o.word_count.has_value());
    EXPECT_FALSE(o.link_count.has_value());
    EXPECT_EQ(o.language, "und");
    EXPECT_FALSE(o.vpn_eu);
}

// Directional analogue of the prevalence/cookie relationship: when every
// banner page has strictly more third-party persistent cookies than every
// bannerless page, the medians are ordered the same way.
TEST(ThirdPartyPersistent, MedianDirectionOnConstructedCorpus) {
    auto median = [](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        size_t n = v.size();
        return n % 2 ? double(v[n / 2]) : (v[n / 2 - 1] + v[n / 2]) / 2.0;
    };
    std::vector<int> with_banner, without_banner;
    for (int i = 0; i < 9; ++i) {
        with_banner.push_back(3 + (i % 3));     // 3..5
        without_banner.push_back(i % 3 == 0 ? 0 : 1);  // 0..1
    }
    EXPECT_GT(median(with_banner), median(without_banner));
}
