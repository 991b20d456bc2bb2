#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "hostprobe/matcher.hpp"
#include "hostprobe/rdap.hpp"
#include "hostprobe/url_prep.hpp"

using namespace hostprobe;

namespace {

std::shared_ptr<const StopWords> stops() {
    static auto s =
        StopWords::load_file(std::string(HOSTPROBE_DATA_DIR) + "/stopwords.txt");
    return s;
}

std::shared_ptr<const FrequencyTable> freq() {
    static auto f = FrequencyTable::load_file(std::string(HOSTPROBE_DATA_DIR) +
                                              "/word_frequencies.tsv");
    return f;
}

OwnershipEvidence ev(const std::string& title, const std::string& esld,
                     std::vector<std::string> rdap_raw) {
    std::vector<std::string> rdap_clean;
    for (const auto& r : rdap_raw) {
        auto n = normalize(r, *stops());
        if (!n.clean.empty()) rdap_clean.push_back(n.clean);
    }
    return build_evidence(title, esld.empty() ? std::nullopt : std::optional(esld),
                          rdap_clean, *freq(), *stops());
}

RdapRecord rdap_ok(std::vector<std::string> owners) {
    RdapRecord r;
    r.status = RdapStatus::ok;
    r.owner_strings = std::move(owners);
    return r;
}

}  // namespace

TEST_CASE("normalize applies trim, punctuation, case, stop words in order") {
    auto n = normalize("  Bank of America - Banking, Credit Cards  ", *stops());
    CHECK(n.clean == "bank america banking credit cards");
    CHECK(n.tokens == std::vector<std::string>{"bank", "america", "banking", "credit",
                                               "cards"});

    CHECK(normalize("", *stops()).clean == "");
    CHECK(normalize("", *stops()).tokens.empty());

    auto all_stop = normalize("THE AND OF", *stops());
    CHECK(all_stop.clean == "");
    CHECK(all_stop.tokens.empty());

    CHECK(normalize("Cloudflare, Inc.", *stops()).clean == "cloudflare inc");
    CHECK(normalize("...", *stops()).clean == "");
}

TEST_CASE("normalize handles unicode punctuation and letters") {
    // curly quote and em-dash are delimiters, accented letters survive;
    // the stray "o" from O'Reilly is a stop word
    auto n = normalize("O’Reilly — München", *stops());
    CHECK(n.tokens == std::vector<std::string>{"reilly", "münchen"});
    // Latin-1 capitals lowercase
    CHECK(normalize("MÜNCHEN", *stops()).clean == "münchen");
}

TEST_CASE("six checks: each can fire") {
    // 1: title substring of an rdap string
    auto r1 = match_ownership(ev("Bank of America", "", {"Bank America Corporation"}));
    CHECK(r1.matched);
    CHECK(r1.fired_check == Check::title_in_rdap);

    // 2: esld substring of an rdap string
    auto r2 = match_ownership(ev("", "acmewidgets", {"acmewidgets hosting llc"}));
    CHECK(r2.matched);
    CHECK(r2.fired_check == Check::esld_in_rdap);

    // 3: rdap string inside the (longer) title
    auto r3 = match_ownership(
        ev("Cloudflare global network services", "", {"Cloudflare"}));
    CHECK(r3.matched);
    CHECK(r3.fired_check == Check::rdap_in_title);

    // 4: rdap string inside the esld string
    auto r4 = match_ownership(ev("totally different", "megacorpsystems", {"megacorp"}));
    CHECK(r4.matched);
    CHECK(r4.fired_check == Check::rdap_in_esld);

    // 5: token overlap with the title
    auto r5 = match_ownership(
        ev("Pacific University Observatory", "", {"University Pacific Networks Trust"}));
    CHECK(r5.matched);
    CHECK(r5.fired_check == Check::title_token_overlap);
    REQUIRE(r5.overlap_ratio);
    CHECK(*r5.overlap_ratio == doctest::Approx(2.0 / 3.0));

    // 6: token overlap with the esld only
    auto r6 = match_ownership(ev("Welcome", "bankofamerica", {"national bank trust"}));
    CHECK(r6.matched);
    CHECK(r6.fired_check == Check::esld_token_overlap);
}

TEST_CASE("no match across unrelated evidence") {
    auto r = match_ownership(ev("Example Site", "example", {"Cloudflare, Inc."}));
    CHECK_FALSE(r.matched);
    CHECK(r.fired_check == Check::none);
    CHECK_FALSE(r.overlap_ratio);

    CHECK_FALSE(match_ownership(ev("", "", {})).matched);
    CHECK_FALSE(match_ownership(ev("Some Title", "title", {})).matched);
}

TEST_CASE("identical evidence on both sides matches") {
    auto r = match_ownership(ev("Acme Rockets", "acmerockets", {"Acme Rockets"}));
    CHECK(r.matched);
    CHECK(r.fired_check == Check::title_in_rdap);
}

TEST_CASE("threshold boundary: exactly 50 percent fires, below does not") {
    OwnershipEvidence e;
    e.title_tokens = {"alpha", "beta"};
    e.rdap_strings = {"alpha gamma delta epsilon"};
    e.rdap_tokens = {"alpha", "gamma", "delta", "epsilon"};
    auto r = match_ownership(e);
    CHECK(r.matched);  // 1 of min(2,4) = 0.5
    CHECK(r.fired_check == Check::title_token_overlap);
    CHECK(*r.overlap_ratio == doctest::Approx(0.5));

    OwnershipEvidence below;
    below.title_tokens = {"alpha", "beta", "zeta"};
    below.rdap_strings = {"alpha gamma delta epsilon omega"};
    below.rdap_tokens = {"alpha", "gamma", "delta", "epsilon", "omega"};
    auto rb = match_ownership(below);
    CHECK_FALSE(rb.matched);  // 1 of min(3,5) = 0.333

    OwnershipEvidence none;
    none.title_tokens = {"alpha", "beta"};
    none.rdap_strings = {"gamma delta"};
    none.rdap_tokens = {"gamma", "delta"};
    CHECK_FALSE(match_ownership(none).matched);
}

TEST_CASE("duplicate tokens do not inflate the overlap") {
    OwnershipEvidence e;
    e.title_tokens = {"york", "york", "york", "city"};  // set = {york, city}
    e.rdap_strings = {"york hosting services llc"};
    e.rdap_tokens = {"york", "hosting", "services", "llc"};
    auto r = match_ownership(e);
    CHECK(r.matched);  // |{york}| / min(2,4) = 0.5
    CHECK(*r.overlap_ratio == doctest::Approx(0.5));
}

TEST_CASE("short substring operands are skipped") {
    // two-character title must not substring-match everything
    auto r = match_ownership(ev("hp", "", {"shphere networks"}));
    CHECK_FALSE(r.matched);

    // two-character rdap string skipped as a needle
    OwnershipEvidence e;
    e.title_clean = "shphere networks";
    e.title_tokens = {"shphere", "networks"};
    e.rdap_strings = {"hp"};
    e.rdap_tokens = {"hp"};
    CHECK_FALSE(match_ownership(e).matched);
}

TEST_CASE("evaluation order is fixed and trace covers all six") {
    auto r = match_ownership(ev("Acme Rockets", "acmerockets", {"Acme Rockets"}));
    REQUIRE(r.trace.size() == 6);
    CHECK(r.trace[0].check == Check::title_in_rdap);
    CHECK(r.trace[1].check == Check::esld_in_rdap);
    CHECK(r.trace[2].check == Check::rdap_in_title);
    CHECK(r.trace[3].check == Check::rdap_in_esld);
    CHECK(r.trace[4].check == Check::title_token_overlap);
    CHECK(r.trace[5].check == Check::esld_token_overlap);
}

TEST_CASE("permutation invariance of matched") {
    std::vector<std::string> rdap = {"first networks", "second hosting", "acme rockets"};
    auto base = ev("Acme Rockets", "acmerockets", rdap);
    bool expect = match_ownership(base).matched;
    std::mt19937 rng(7);
    for (int i = 0; i < 20; ++i) {
        auto shuffled = rdap;
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(match_ownership(ev("Acme Rockets", "acmerockets", shuffled)).matched ==
              expect);
    }
}

TEST_CASE("classify maps rdap status and evidence to verdicts") {
    RdapRecord no_info;
    no_info.status = RdapStatus::no_info_available;
    auto v1 = classify(ev("Bank of America", "bankofamerica", {}), no_info);
    CHECK(v1.verdict == Verdict::Unknown);
    CHECK(v1.reason == "rdap_no_info_available");

    auto v2 = classify(ev("Bank of America", "bankofamerica",
                          {"Bank America Corporation"}),
                       rdap_ok({"bank america corporation"}));
    CHECK(v2.verdict == Verdict::SelfHosted);
    CHECK(v2.reason == "title_in_rdap");

    auto v3 = classify(ev("Example Site", "example", {"Cloudflare, Inc."}),
                       rdap_ok({"cloudflare inc"}));
    CHECK(v3.verdict == Verdict::ThirdParty);

    auto v4 = classify(ev("", "", {"Cloudflare, Inc."}), rdap_ok({"cloudflare inc"}));
    CHECK(v4.verdict == Verdict::Unknown);
    CHECK(v4.reason == "empty_page_evidence");

    // esld token overlap at 1.0 is a self-host signal
    auto v5 = classify(ev("", "bankofamerica", {"america bank"}),
                       rdap_ok({"america bank"}));
    CHECK(v5.verdict == Verdict::SelfHosted);
    REQUIRE(v5.match);
    CHECK(v5.match->fired_check == Check::esld_token_overlap);
    CHECK(*v5.match->overlap_ratio == doctest::Approx(1.0));
}

TEST_CASE("classify never self-hosts on empty owner strings") {
    RdapRecord empty_ok;
    empty_ok.status = RdapStatus::ok;  // malformed upstream record
    auto v = classify(ev("Acme", "acme", {}), empty_ok);
    CHECK(v.verdict != Verdict::SelfHosted);
}
