#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hostprobe/matcher.hpp"
#include "hostprobe/url.hpp"
#include "hostprobe/url_prep.hpp"

using namespace hostprobe;

namespace {

std::shared_ptr<const PublicSuffixList> psl() {
    static auto p = PublicSuffixList::load_file(
        std::string(HOSTPROBE_DATA_DIR) + "/public_suffix_list.dat");
    return p;
}

}  // namespace

TEST_CASE("hostname validation") {
    CHECK(valid_hostname("example.com"));
    CHECK(valid_hostname("a-b.example.com"));
    CHECK(valid_hostname("xn--bcher-kva.example"));
    CHECK(valid_hostname("localhost"));
    CHECK_FALSE(valid_hostname(""));
    CHECK_FALSE(valid_hostname("bad domain!"));
    CHECK_FALSE(valid_hostname("foo..bar"));
    CHECK_FALSE(valid_hostname("-leading.example"));
    CHECK_FALSE(valid_hostname("trailing-.example"));
    CHECK_FALSE(valid_hostname("exa_mple.com"));
    CHECK_FALSE(valid_hostname(std::string(64, 'a') + ".com"));
    CHECK_FALSE(valid_hostname("bücher.example"));  // IDN only as punycode
}

TEST_CASE("expand_domain: bare domain gives four variants in fixed order") {
    auto ex = expand_domain("example.com");
    REQUIRE(ex.ok());
    REQUIRE(ex.urls.size() == 4);
    CHECK(ex.urls[0].url == "http://example.com");
    CHECK(ex.urls[1].url == "http://www.example.com");
    CHECK(ex.urls[2].url == "https://example.com");
    CHECK(ex.urls[3].url == "https://www.example.com");
    CHECK(ex.urls[0].www_prefixed == false);
    CHECK(ex.urls[1].www_prefixed == true);
    for (const auto& u : ex.urls) CHECK(u.source_domain == "example.com");
}

TEST_CASE("expand_domain: www input gives scheme variants only") {
    auto ex = expand_domain("www.example.com");
    REQUIRE(ex.ok());
    REQUIRE(ex.urls.size() == 2);
    CHECK(ex.urls[0].url == "http://www.example.com");
    CHECK(ex.urls[1].url == "https://www.example.com");
    CHECK(ex.urls[0].www_prefixed);  // stratum follows the host form
}

TEST_CASE("expand_domain: rejects bad input with the offending line") {
    auto ex = expand_domain("bad domain!");
    CHECK_FALSE(ex.ok());
    CHECK(ex.error.find("bad domain!") != std::string::npos);
    CHECK_FALSE(expand_domain("").ok());
    CHECK_FALSE(expand_domain("foo..bar").ok());
}

TEST_CASE("expand_domain: URL passthrough") {
    auto ex = expand_domain("https://www.example.com/landing?x=1");
    REQUIRE(ex.ok());
    REQUIRE(ex.urls.size() == 1);
    CHECK(ex.urls[0].url == "https://www.example.com/landing?x=1");
    CHECK(ex.urls[0].scheme == "https");
    CHECK(ex.urls[0].www_prefixed);
    CHECK(ex.urls[0].source_domain == "www.example.com");
    CHECK_FALSE(expand_domain("ftp://example.com/").ok());
}

TEST_CASE("expand_domain: every output parses back to the source domain") {
    for (const char* d : {"example.com", "www.example.com", "a-b.co.uk"}) {
        auto ex = expand_domain(d);
        REQUIRE(ex.ok());
        CHECK((ex.urls.size() == 4 || ex.urls.size() == 2));
        for (const auto& su : ex.urls) {
            auto u = Url::parse(su.url);
            REQUIRE(u);
            std::string want = su.source_domain;
            if (su.www_prefixed && want.rfind("www.", 0) != 0) want = "www." + want;
            CHECK(u->host == want);
        }
    }
}

TEST_CASE("extract_esld basics") {
    auto e = extract_esld("www.bankofamerica.com", *psl());
    REQUIRE(e);
    CHECK(e->value == "bankofamerica");
    CHECK(e->public_suffix == "com");

    auto uk = extract_esld("foo.co.uk", *psl());
    REQUIRE(uk);
    CHECK(uk->value == "foo");
    CHECK(uk->public_suffix == "co.uk");

    auto deep = extract_esld("a.b.foo.co.uk", *psl());
    REQUIRE(deep);
    CHECK(deep->value == "foo");

    CHECK(extract_esld("WWW.Example.COM", *psl())->value == "example");
}

TEST_CASE("extract_esld error cases") {
    EsldError err;
    CHECK_FALSE(extract_esld("localhost", *psl(), &err));
    CHECK(err == EsldError::single_label);
    CHECK_FALSE(extract_esld("co.uk", *psl(), &err));
    CHECK(err == EsldError::public_suffix_only);
    CHECK_FALSE(extract_esld("192.0.2.7", *psl(), &err));
    CHECK(err == EsldError::ip_literal);
    CHECK_FALSE(extract_esld("[2001:db8::1]", *psl(), &err));
    CHECK(err == EsldError::ip_literal);
    CHECK_FALSE(extract_esld("not valid!", *psl(), &err));
    CHECK(err == EsldError::invalid_hostname);
}

TEST_CASE("extract_esld wildcard and exception rules") {
    auto w = extract_esld("foo.bar.ck", *psl());
    REQUIRE(w);
    CHECK(w->value == "foo");
    CHECK(w->public_suffix == "bar.ck");

    // !www.ck: the exception makes www.ck registrable
    auto ex = extract_esld("www.ck", *psl());
    REQUIRE(ex);
    CHECK(ex->value == "www");
    CHECK(ex->public_suffix == "ck");

    // private-section suffixes
    auto gh = extract_esld("someuser.github.io", *psl());
    REQUIRE(gh);
    CHECK(gh->value == "someuser");
    CHECK(gh->public_suffix == "github.io");
}

TEST_CASE("extract_esld idempotence") {
    for (const char* host :
         {"www.bankofamerica.com", "a.b.foo.co.uk", "x.github.io", "deep.sub.example.org"}) {
        auto e = extract_esld(host, *psl());
        REQUIRE(e);
        auto again = extract_esld(e->value + "." + e->public_suffix, *psl());
        REQUIRE(again);
        CHECK(again->value == e->value);
        CHECK(again->public_suffix == e->public_suffix);
    }
}

TEST_CASE("esld_tokens segments and filters") {
    auto freq = FrequencyTable::load_file(std::string(HOSTPROBE_DATA_DIR) +
                                          "/word_frequencies.tsv");
    auto stops = StopWords::load_file(std::string(HOSTPROBE_DATA_DIR) + "/stopwords.txt");
    auto toks = esld_tokens("bankofamerica", *freq, *stops);
    CHECK(toks == std::vector<std::string>{"bank", "america"});  // "of" filtered

    CHECK(esld_tokens("bank-of-america", *freq, *stops) ==
          std::vector<std::string>{"bank", "america"});

    CHECK(esld_tokens("google", *freq, *stops) == std::vector<std::string>{"google"});

    // all-stop-word value falls back to the value itself
    CHECK(esld_tokens("the", *freq, *stops) == std::vector<std::string>{"the"});
}
