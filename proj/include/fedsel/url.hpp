#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace fedsel {

/// Configurable query-parameter strip list for URL normalization. The default
/// covers common tracking additions (utm_*), search-engine redirect params and
/// session ids; the exact set is a project choice, not a standard.
struct UrlNormalizeOptions {
    std::vector<std::string> strip_prefixes = {"utm_"};
    std::vector<std::string> strip_params = {
        "gclid", "fbclid",  "msclkid",    "yclid", "igshid",     "mc_cid", "mc_eid",
        "ved",   "ei",      "usg",        "sa",    "aqs",        "sourceid", "rlz",
        "sid",   "sessionid", "phpsessid", "jsessionid", "ref_src",
    };

    bool should_strip(std::string_view key_lower) const;
};

/// Canonicalize a URL for identity comparison: lowercase scheme/host, drop
/// default ports and fragments, strip listed query parameters, remove trailing
/// slashes from the path and uppercase percent-encoding. Idempotent.
/// Throws Error naming the input when it is not a parseable absolute URL.
std::string normalize_url(std::string_view raw, const UrlNormalizeOptions& opts = {});

} // namespace fedsel
