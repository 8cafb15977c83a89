#include "fedsel/text.hpp"

#include <cctype>

namespace fedsel {

namespace {

// Porter stemmer, following the original definition step by step. The word is
// held in a mutable buffer `b` with logical end `k` (index of last letter).
struct Stemmer {
    std::string b;
    int k = -1; // last valid index
    int j = 0;  // end of stem candidate during condition checks

    bool cons(int i) const {
        switch (b[static_cast<std::size_t>(i)]) {
        case 'a': case 'e': case 'i': case 'o': case 'u':
            return false;
        case 'y':
            return i == 0 ? true : !cons(i - 1);
        default:
            return true;
        }
    }

    // measure: number of VC sequences in b[0..j]
    int m() const {
        int n = 0;
        int i = 0;
        while (true) {
            if (i > j) return n;
            if (!cons(i)) break;
            i++;
        }
        i++;
        while (true) {
            while (true) {
                if (i > j) return n;
                if (cons(i)) break;
                i++;
            }
            i++;
            n++;
            while (true) {
                if (i > j) return n;
                if (!cons(i)) break;
                i++;
            }
            i++;
        }
    }

    bool vowel_in_stem() const {
        for (int i = 0; i <= j; ++i)
            if (!cons(i)) return true;
        return false;
    }

    bool double_cons(int i) const {
        if (i < 1) return false;
        if (b[static_cast<std::size_t>(i)] != b[static_cast<std::size_t>(i - 1)]) return false;
        return cons(i);
    }

    // cvc at i, where the final c is not w, x or y
    bool cvc(int i) const {
        if (i < 2 || !cons(i) || cons(i - 1) || !cons(i - 2)) return false;
        char ch = b[static_cast<std::size_t>(i)];
        return ch != 'w' && ch != 'x' && ch != 'y';
    }

    bool ends(std::string_view s) {
        int len = static_cast<int>(s.size());
        if (len > k + 1) return false;
        if (b.compare(static_cast<std::size_t>(k - len + 1), static_cast<std::size_t>(len),
                      s) != 0)
            return false;
        j = k - len;
        return true;
    }

    void set_to(std::string_view s) {
        b.replace(static_cast<std::size_t>(j + 1), std::string::npos, s);
        k = j + static_cast<int>(s.size());
        b.resize(static_cast<std::size_t>(k + 1));
    }

    void replace_if_m_gt0(std::string_view s) {
        if (m() > 0) set_to(s);
    }

    void step1ab() {
        if (b[static_cast<std::size_t>(k)] == 's') {
            if (ends("sses"))
                k -= 2;
            else if (ends("ies"))
                set_to("i");
            else if (b[static_cast<std::size_t>(k - 1)] != 's')
                k--;
        }
        if (ends("eed")) {
            if (m() > 0) k--;
        } else if ((ends("ed") || ends("ing")) && vowel_in_stem()) {
            k = j;
            if (ends("at"))
                set_to("ate");
            else if (ends("bl"))
                set_to("ble");
            else if (ends("iz"))
                set_to("ize");
            else if (double_cons(k)) {
                k--;
                char ch = b[static_cast<std::size_t>(k)];
                if (ch == 'l' || ch == 's' || ch == 'z') k++;
            } else if (m() == 1 && cvc(k)) {
                set_to2("e");
            }
        }
        b.resize(static_cast<std::size_t>(k + 1));
    }

    // append form of set_to used when j == k
    void set_to2(std::string_view s) {
        j = k;
        set_to(s);
    }

    void step1c() {
        if (ends("y") && vowel_in_stem()) b[static_cast<std::size_t>(k)] = 'i';
    }

    void step2() {
        switch (b[static_cast<std::size_t>(k - 1)]) {
        case 'a':
            if (ends("ational")) { replace_if_m_gt0("ate"); break; }
            if (ends("tional")) { replace_if_m_gt0("tion"); break; }
            break;
        case 'c':
            if (ends("enci")) { replace_if_m_gt0("ence"); break; }
            if (ends("anci")) { replace_if_m_gt0("ance"); break; }
            break;
        case 'e':
            if (ends("izer")) { replace_if_m_gt0("ize"); break; }
            break;
        case 'l':
            if (ends("abli")) { replace_if_m_gt0("able"); break; }
            if (ends("alli")) { replace_if_m_gt0("al"); break; }
            if (ends("entli")) { replace_if_m_gt0("ent"); break; }
            if (ends("eli")) { replace_if_m_gt0("e"); break; }
            if (ends("ousli")) { replace_if_m_gt0("ous"); break; }
            break;
        case 'o':
            if (ends("ization")) { replace_if_m_gt0("ize"); break; }
            if (ends("ation")) { replace_if_m_gt0("ate"); break; }
            if (ends("ator")) { replace_if_m_gt0("ate"); break; }
            break;
        case 's':
            if (ends("alism")) { replace_if_m_gt0("al"); break; }
            if (ends("iveness")) { replace_if_m_gt0("ive"); break; }
            if (ends("fulness")) { replace_if_m_gt0("ful"); break; }
            if (ends("ousness")) { replace_if_m_gt0("ous"); break; }
            break;
        case 't':
            if (ends("aliti")) { replace_if_m_gt0("al"); break; }
            if (ends("iviti")) { replace_if_m_gt0("ive"); break; }
            if (ends("biliti")) { replace_if_m_gt0("ble"); break; }
            break;
        default:
            break;
        }
    }

    void step3() {
        switch (b[static_cast<std::size_t>(k)]) {
        case 'e':
            if (ends("icate")) { replace_if_m_gt0("ic"); break; }
            if (ends("ative")) { replace_if_m_gt0(""); break; }
            if (ends("alize")) { replace_if_m_gt0("al"); break; }
            break;
        case 'i':
            if (ends("iciti")) { replace_if_m_gt0("ic"); break; }
            break;
        case 'l':
            if (ends("ical")) { replace_if_m_gt0("ic"); break; }
            if (ends("ful")) { replace_if_m_gt0(""); break; }
            break;
        case 's':
            if (ends("ness")) { replace_if_m_gt0(""); break; }
            break;
        default:
            break;
        }
    }

    void step4() {
        switch (b[static_cast<std::size_t>(k - 1)]) {
        case 'a':
            if (ends("al")) break;
            return;
        case 'c':
            if (ends("ance")) break;
            if (ends("ence")) break;
            return;
        case 'e':
            if (ends("er")) break;
            return;
        case 'i':
            if (ends("ic")) break;
            return;
        case 'l':
            if (ends("able")) break;
            if (ends("ible")) break;
            return;
        case 'n':
            if (ends("ant")) break;
            if (ends("ement")) break;
            if (ends("ment")) break;
            if (ends("ent")) break;
            return;
        case 'o':
            if (ends("ion") && j >= 0 &&
                (b[static_cast<std::size_t>(j)] == 's' || b[static_cast<std::size_t>(j)] == 't'))
                break;
            if (ends("ou")) break;
            return;
        case 's':
            if (ends("ism")) break;
            return;
        case 't':
            if (ends("ate")) break;
            if (ends("iti")) break;
            return;
        case 'u':
            if (ends("ous")) break;
            return;
        case 'v':
            if (ends("ive")) break;
            return;
        case 'z':
            if (ends("ize")) break;
            return;
        default:
            return;
        }
        if (m() > 1) {
            k = j;
            b.resize(static_cast<std::size_t>(k + 1));
        }
    }

    void step5() {
        j = k;
        if (b[static_cast<std::size_t>(k)] == 'e') {
            int a = m();
            if (a > 1 || (a == 1 && !cvc(k - 1))) {
                k--;
                b.resize(static_cast<std::size_t>(k + 1));
            }
        }
        j = k;
        if (b[static_cast<std::size_t>(k)] == 'l' && double_cons(k) && m() > 1) {
            k--;
            b.resize(static_cast<std::size_t>(k + 1));
        }
    }

    std::string run(std::string_view word) {
        b.assign(word);
        k = static_cast<int>(b.size()) - 1;
        if (k <= 1) return b;
        step1ab();
        if (k > 0) step1c();
        if (k > 0) step2();
        if (k > 0) step3();
        if (k > 0) step4();
        if (k > 0) step5();
        b.resize(static_cast<std::size_t>(k + 1));
        return b;
    }
};

} // namespace

std::string porter_stem(std::string_view word) {
    Stemmer s;
    return s.run(word);
}

std::vector<std::string> tokenize_raw(std::string_view text) {
    std::vector<std::string> out;
    std::string cur;
    for (unsigned char c : text) {
        if ((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9')) {
            cur += static_cast<char>(c);
        } else if (c >= 'A' && c <= 'Z') {
            cur += static_cast<char>(c - 'A' + 'a');
        } else {
            if (!cur.empty()) {
                out.push_back(std::move(cur));
                cur.clear();
            }
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

std::vector<std::string> tokenize_stem(std::string_view text) {
    std::vector<std::string> out = tokenize_raw(text);
    for (auto& t : out) t = porter_stem(t);
    return out;
}

} // namespace fedsel
