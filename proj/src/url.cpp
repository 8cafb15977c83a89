#include "fedsel/url.hpp"

#include <algorithm>
#include <cctype>

#include "fedsel/error.hpp"

namespace fedsel {

namespace {

std::string to_lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

bool is_hex(char c) {
    return (c >= '0' && c <= '9') || (c >= 'a' && c <= 'f') || (c >= 'A' && c <= 'F');
}

// Uppercase the hex digits of every %xx escape. Malformed escapes are a parse
// error; URL identity would otherwise be ambiguous.
std::string normalize_percent(std::string_view s, std::string_view whole) {
    std::string out;
    out.reserve(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        char c = s[i];
        if (c == '%') {
            if (i + 2 >= s.size() || !is_hex(s[i + 1]) || !is_hex(s[i + 2]))
                fail("normalize_url: malformed percent-encoding in \"" + std::string(whole) + "\"");
            out += '%';
            out += static_cast<char>(std::toupper(static_cast<unsigned char>(s[i + 1])));
            out += static_cast<char>(std::toupper(static_cast<unsigned char>(s[i + 2])));
            i += 2;
        } else {
            out += c;
        }
    }
    return out;
}

bool default_port(std::string_view scheme, std::string_view port) {
    return (scheme == "http" && port == "80") || (scheme == "https" && port == "443") ||
           (scheme == "ftp" && port == "21");
}

} // namespace

bool UrlNormalizeOptions::should_strip(std::string_view key_lower) const {
    for (const auto& p : strip_prefixes)
        if (key_lower.size() >= p.size() && key_lower.compare(0, p.size(), p) == 0) return true;
    return std::find(strip_params.begin(), strip_params.end(), key_lower) != strip_params.end();
}

std::string normalize_url(std::string_view raw, const UrlNormalizeOptions& opts) {
    const std::string offender(raw);
    auto bad = [&](const char* why) -> void {
        fail(std::string("normalize_url: ") + why + " in \"" + offender + "\"");
    };

    std::size_t scheme_end = raw.find("://");
    if (scheme_end == std::string_view::npos || scheme_end == 0) bad("missing scheme");
    std::string_view scheme_sv = raw.substr(0, scheme_end);
    for (char c : scheme_sv)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '+' && c != '-' && c != '.')
            bad("invalid scheme");
    if (!std::isalpha(static_cast<unsigned char>(scheme_sv[0]))) bad("invalid scheme");

    std::string_view rest = raw.substr(scheme_end + 3);

    // fragment dropped entirely
    if (auto h = rest.find('#'); h != std::string_view::npos) rest = rest.substr(0, h);

    std::size_t path_start = rest.find_first_of("/?");
    std::string_view authority =
        path_start == std::string_view::npos ? rest : rest.substr(0, path_start);
    std::string_view path_query =
        path_start == std::string_view::npos ? std::string_view{} : rest.substr(path_start);

    if (authority.empty()) bad("empty host");

    std::string_view userinfo;
    if (auto at = authority.rfind('@'); at != std::string_view::npos) {
        userinfo = authority.substr(0, at + 1);
        authority = authority.substr(at + 1);
    }

    // split host:port; IPv6 literals keep their brackets
    std::string_view host = authority, port;
    if (!authority.empty() && authority.front() == '[') {
        auto close = authority.find(']');
        if (close == std::string_view::npos) bad("unterminated IPv6 host");
        host = authority.substr(0, close + 1);
        std::string_view tail = authority.substr(close + 1);
        if (!tail.empty()) {
            if (tail.front() != ':') bad("invalid authority");
            port = tail.substr(1);
        }
    } else if (auto colon = authority.rfind(':'); colon != std::string_view::npos) {
        host = authority.substr(0, colon);
        port = authority.substr(colon + 1);
    }
    if (host.empty()) bad("empty host");
    for (char c : port)
        if (!std::isdigit(static_cast<unsigned char>(c))) bad("invalid port");

    std::string_view path = path_query, query;
    if (auto q = path_query.find('?'); q != std::string_view::npos) {
        path = path_query.substr(0, q);
        query = path_query.substr(q + 1);
    }

    std::string norm_path = normalize_percent(path, raw);
    while (!norm_path.empty() && norm_path.back() == '/') norm_path.pop_back();

    // rebuild the query keeping only parameters that survive the strip list,
    // in their original order
    std::string norm_query;
    if (!query.empty()) {
        std::size_t pos = 0;
        while (pos <= query.size()) {
            std::size_t amp = query.find('&', pos);
            std::string_view param =
                query.substr(pos, amp == std::string_view::npos ? query.size() - pos : amp - pos);
            if (!param.empty()) {
                std::string_view key = param.substr(0, param.find('='));
                if (!opts.should_strip(to_lower(key))) {
                    if (!norm_query.empty()) norm_query += '&';
                    norm_query += normalize_percent(param, raw);
                }
            }
            if (amp == std::string_view::npos) break;
            pos = amp + 1;
        }
    }

    std::string out = to_lower(scheme_sv);
    out += "://";
    out += userinfo;
    out += to_lower(host);
    if (!port.empty() && !default_port(to_lower(scheme_sv), port)) {
        out += ':';
        out += port;
    }
    out += norm_path;
    if (!norm_query.empty()) {
        out += '?';
        out += norm_query;
    }
    return out;
}

} // namespace fedsel
