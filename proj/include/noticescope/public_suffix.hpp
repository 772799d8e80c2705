#pragma once

// Registrable-domain (public-suffix-plus-one) extraction over a bundled
// snapshot of well-known public suffix rules. Hosts under suffixes the
// snapshot does not know fall back to the list's default rule, i.e. the
// last two labels.

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "noticescope/detail/strings.hpp"

namespace noticescope::noticemetrics {

namespace impl {

// Snapshot subset of the ICANN public suffix rules: the ccTLD registries
// relevant to the measured countries plus common gTLDs. "*." entries are
// wildcards, "!" entries exceptions.
inline const std::unordered_set<std::string>& suffix_rules() {
    static const std::unordered_set<std::string> rules = {
        // generic
        "com", "net", "org", "edu", "gov", "mil", "int", "info", "biz", "io",
        "tv", "me", "eu", "app", "dev",
        // at
        "at", "ac.at", "co.at", "gv.at", "or.at",
        // be
        "be", "ac.be",
        // ca
        "ca", "ab.ca", "bc.ca", "mb.ca", "nb.ca", "nf.ca", "nl.ca", "ns.ca",
        "nt.ca", "nu.ca", "on.ca", "pe.ca", "qc.ca", "sk.ca", "yk.ca", "gc.ca",
        // ch / cz / de / nl / us
        "ch", "cz", "de", "nl", "us",
        // es
        "es", "com.es", "nom.es", "org.es", "gob.es", "edu.es",
        // fr
        "fr", "asso.fr", "com.fr", "gouv.fr", "nom.fr", "prd.fr", "tm.fr",
        // gr
        "gr", "com.gr", "edu.gr", "net.gr", "org.gr", "gov.gr",
        // hu
        "hu", "co.hu", "info.hu", "org.hu", "priv.hu",
        // it
        "it", "gov.it", "edu.it",
        // pl
        "pl", "com.pl", "net.pl", "org.pl", "info.pl", "waw.pl", "gov.pl",
        // pt
        "pt", "com.pt", "edu.pt", "gov.pt", "int.pt", "net.pt", "nome.pt",
        "org.pt", "publ.pt",
        // ro
        "ro", "arts.ro", "com.ro", "firm.ro", "info.ro", "nom.ro", "nt.ro",
        "org.ro", "rec.ro", "store.ro", "tm.ro", "www.ro",
        // se
        "se", "ac.se", "com.se", "org.se",
        // uk
        "uk", "ac.uk", "co.uk", "gov.uk", "ltd.uk", "me.uk", "net.uk",
        "nhs.uk", "org.uk", "plc.uk", "police.uk", "sch.uk",
        // au
        "au", "asn.au", "com.au", "edu.au", "gov.au", "id.au", "net.au", "org.au",
        // jp
        "jp", "ac.jp", "co.jp", "go.jp", "ne.jp", "or.jp",
        // co (Colombia)
        "co", "com.co", "net.co", "org.co",
        // wildcard + exception pair
        "*.ck", "!www.ck",
    };
    return rules;
}

}  // namespace impl

// Number of labels in the public suffix of `labels` per the standard
// matching algorithm (exceptions beat wildcards beat plain rules; the
// default rule "*" makes an unknown TLD its own suffix).
inline size_t public_suffix_labels(const std::vector<std::string_view>& labels) {
    const auto& rules = impl::suffix_rules();
    size_t n = labels.size();
    size_t best = 1;  // default rule "*"
    for (size_t i = 0; i < n; ++i) {
        std::string candidate;
        for (size_t k = i; k < n; ++k) {
            if (k > i) candidate.push_back('.');
            candidate += labels[k];
        }
        if (rules.contains("!" + candidate)) return n - i - 1;
        if (rules.contains(candidate) && n - i > best) best = n - i;
        if (i + 1 < n) {
            std::string wildcard = "*.";
            for (size_t k = i + 1; k < n; ++k) {
                if (k > i + 1) wildcard.push_back('.');
                wildcard += labels[k];
            }
            if (rules.contains(wildcard) && n - i > best) best = n - i;
        }
    }
    return best;
}

// Public-suffix-plus-one for a lowercase hostname. A host that is itself a
// public suffix (or a single label) is returned unchanged.
inline std::string registrable_domain(std::string_view host) {
    while (!host.empty() && host.front() == '.') host.remove_prefix(1);
    while (!host.empty() && host.back() == '.') host.remove_suffix(1);
    if (host.empty()) return {};
    std::vector<std::string_view> labels;
    for (auto l : detail::split(host, '.')) labels.push_back(l);
    size_t suffix = public_suffix_labels(labels);
    if (suffix + 1 > labels.size()) return std::string(host);
    size_t keep = suffix + 1;
    std::string out;
    for (size_t i = labels.size() - keep; i < labels.size(); ++i) {
        if (!out.empty()) out.push_back('.');
        out += labels[i];
    }
    return out;
}

}  // namespace noticescope::noticemetrics
