#pragma once

#include <optional>
#include <string>

namespace hostprobe {

enum class RedirectMechanism { http_status, meta_refresh, script_location };

const char* mechanism_name(RedirectMechanism m);
std::optional<RedirectMechanism> mechanism_from_name(const std::string& name);

// Text of the first <title> element in document order, entity-decoded and
// whitespace-collapsed; "" when absent. Decoding honors declared_charset
// (utf-8, latin-1/windows-1252, ascii) and falls back to UTF-8 with
// replacement characters.
std::string extract_title(const std::string& html,
                          const std::optional<std::string>& declared_charset);

// charset= parameter of a Content-Type header value, if any.
std::optional<std::string> charset_from_content_type(const std::string& content_type);
// <meta charset=...> / <meta http-equiv=content-type ...> sniffing.
std::optional<std::string> charset_from_meta(const std::string& html);

struct HtmlRedirect {
    std::string target_url;  // absolute
    RedirectMechanism mechanism;
};

// First HTML-level redirect of a page, in priority order: a meta refresh
// with delay <= refresh_delay_max_s, then a top-level script location
// assignment with a string-literal target. Relative targets resolve
// against base_url.
std::optional<HtmlRedirect> detect_html_redirect(const std::string& html,
                                                 const std::string& base_url,
                                                 int refresh_delay_max_s = 10);

}  // namespace hostprobe
