#include "fedsel/synth.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

#include "fedsel/engine.hpp"
#include "fedsel/error.hpp"
#include "fedsel/rng.hpp"
#include "fedsel/text.hpp"

namespace fedsel {

namespace {

constexpr const char* kConsonants = "bdfgklmnprstvz";
constexpr const char* kVowels = "aeiou";

// Pronounceable unique word for a vocabulary slot.
std::string make_word(std::size_t id) {
    std::string w;
    std::size_t n = id;
    for (int syll = 0; syll < 3; ++syll) {
        w += kConsonants[n % 14];
        n /= 14;
        w += kVowels[n % 5];
        n /= 5;
    }
    if (n > 0) w += std::to_string(n);
    return w;
}

struct Vocab {
    std::vector<std::string> global;
    std::vector<std::vector<std::string>> subject; // [subject][rank]
    std::vector<double> zipf_cdf_global;
    std::vector<double> zipf_cdf_subject;

    static std::vector<double> zipf_cdf(std::size_t n, double s) {
        std::vector<double> cdf(n);
        double sum = 0.0;
        for (std::size_t r = 0; r < n; ++r) {
            sum += 1.0 / std::pow(static_cast<double>(r + 1), s);
            cdf[r] = sum;
        }
        for (auto& v : cdf) v /= sum;
        return cdf;
    }

    std::size_t draw(const std::vector<double>& cdf, Rng& rng) const {
        double u = rng.uniform();
        return static_cast<std::size_t>(
            std::lower_bound(cdf.begin(), cdf.end(), u) - cdf.begin());
    }
};

struct DocSpec {
    Document doc;
    int subject = 0;
};

class Generator {
public:
    Generator(const GeneratorConfig& cfg, std::uint64_t seed) : cfg_(cfg), seed_(seed) {}

    Dataset run() {
        build_vocab();
        draw_sizes();
        build_pool();
        build_collections();
        build_refstats();
        build_topics();
        build_judgments();
        ds_.validate();
        return std::move(ds_);
    }

private:
    const GeneratorConfig& cfg_;
    std::uint64_t seed_;
    Dataset ds_;
    Vocab vocab_;
    std::vector<std::uint64_t> sizes_;
    std::vector<std::vector<int>> coll_subjects_; // empty = all subjects (WSE)
    std::vector<DocSpec> pool_;
    std::vector<std::vector<std::size_t>> pool_by_subject_;
    std::unordered_map<std::string, int> subject_of_url_;

    std::string coll_id(std::size_t i) const {
        std::string n = std::to_string(i + 1);
        std::size_t width = std::to_string(cfg_.num_collections).size();
        return "e" + std::string(width - std::min(width, n.size()), '0') + n;
    }

    std::string topic_id(std::size_t i) const {
        std::string n = std::to_string(i + 1);
        std::size_t width = std::to_string(cfg_.num_topics).size();
        return "t" + std::string(width - std::min(width, n.size()), '0') + n;
    }

    void build_vocab() {
        vocab_.global.reserve(cfg_.global_vocab);
        for (std::size_t i = 0; i < cfg_.global_vocab; ++i) vocab_.global.push_back(make_word(i));
        vocab_.subject.resize(cfg_.num_subjects);
        for (std::size_t s = 0; s < cfg_.num_subjects; ++s) {
            vocab_.subject[s].reserve(cfg_.subject_vocab);
            for (std::size_t t = 0; t < cfg_.subject_vocab; ++t)
                vocab_.subject[s].push_back(
                    make_word(cfg_.global_vocab + s * cfg_.subject_vocab + t));
        }
        vocab_.zipf_cdf_global = Vocab::zipf_cdf(cfg_.global_vocab, cfg_.zipf_exponent);
        vocab_.zipf_cdf_subject = Vocab::zipf_cdf(cfg_.subject_vocab, cfg_.zipf_exponent);
    }

    // Stratified quantile draw: guarantees the sample spans the distribution's
    // tails for every seed, which a plain i.i.d. draw does not.
    void draw_sizes() {
        const std::size_t n = cfg_.num_collections;
        if (!cfg_.explicit_sizes.empty()) {
            require(cfg_.explicit_sizes.size() == n,
                    "generator: explicit_sizes length must equal num_collections");
            sizes_ = cfg_.explicit_sizes;
            return;
        }
        Rng rng = Rng::stream(seed_, "sizes");
        std::vector<std::uint64_t> draws(n);
        for (std::size_t j = 0; j < n; ++j) {
            double u = (static_cast<double>(j) + rng.uniform()) / static_cast<double>(n);
            u = std::min(std::max(u, 1e-12), 1.0 - 1e-12);
            double z = normal_quantile(u);
            double v = std::exp(cfg_.size_log_mean + cfg_.size_log_sigma * z);
            v = std::min(v, static_cast<double>(cfg_.max_size));
            draws[j] = std::max<std::uint64_t>(cfg_.min_size,
                                               static_cast<std::uint64_t>(std::llround(v)));
        }
        std::sort(draws.begin(), draws.end(), std::greater<>());
        // largest sizes go to the WSEs; the rest are shuffled over the
        // remaining collections
        sizes_.assign(n, 0);
        for (std::size_t i = 0; i < std::min(cfg_.num_wse, n); ++i) sizes_[i] = draws[i];
        std::vector<std::uint64_t> rest(draws.begin() + static_cast<long>(std::min(cfg_.num_wse, n)),
                                        draws.end());
        Rng arng = Rng::stream(seed_, "size-assign");
        arng.shuffle(rest);
        for (std::size_t i = cfg_.num_wse; i < n; ++i) sizes_[i] = rest[i - cfg_.num_wse];
    }

    std::size_t draw_subject_token(int subject, Rng& rng) {
        return vocab_.draw(vocab_.zipf_cdf_subject, rng);
    }

    void append_tokens(std::vector<std::string>& out, int subject, std::size_t count, Rng& rng) {
        for (std::size_t i = 0; i < count; ++i) {
            double r = rng.uniform();
            if (r < cfg_.global_token_fraction) {
                out.push_back(vocab_.global[vocab_.draw(vocab_.zipf_cdf_global, rng)]);
            } else if (r < cfg_.global_token_fraction + cfg_.drift_token_fraction &&
                       cfg_.num_subjects > 1) {
                int other = static_cast<int>(rng.below(cfg_.num_subjects));
                out.push_back(vocab_.subject[static_cast<std::size_t>(other)]
                                            [draw_subject_token(other, rng)]);
            } else {
                out.push_back(vocab_.subject[static_cast<std::size_t>(subject)]
                                            [draw_subject_token(subject, rng)]);
            }
        }
    }

    DocSpec make_doc(int subject, const std::string& host, const std::string& tag, Rng& rng) {
        DocSpec spec;
        spec.subject = subject;
        Document& d = spec.doc;
        bool media = rng.chance(cfg_.media_fraction);
        std::string w1 = vocab_.subject[static_cast<std::size_t>(subject)]
                                       [draw_subject_token(subject, rng)];
        std::string w2 = vocab_.global[vocab_.draw(vocab_.zipf_cdf_global, rng)];
        if (media) {
            bool image = rng.chance(0.7);
            d.media_kind = image ? MediaKind::Image : MediaKind::Sound;
            d.url = "http://" + host + "/" + w1 + "-" + w2 + "/" + tag +
                    (image ? ".jpg" : ".ogg");
        } else {
            double mk = rng.uniform();
            d.media_kind = mk < 0.8 ? MediaKind::Html : (mk < 0.9 ? MediaKind::Text : MediaKind::Pdf);
            d.url = "http://" + host + "/" + w1 + "-" + w2 + "/" + tag;
            std::vector<std::string> title{w1};
            append_tokens(title, subject, 1 + rng.below(3), rng);
            std::size_t len = cfg_.body_len_min +
                              static_cast<std::size_t>(-static_cast<double>(cfg_.body_len_mean -
                                                                            cfg_.body_len_min) *
                                                       std::log(1.0 - rng.uniform()));
            len = std::min(len, cfg_.body_len_max);
            std::vector<std::string> body{w1, w2};
            append_tokens(body, subject, len, rng);
            d.title = join(title);
            d.body = join(body);
            std::vector<std::string> snip(body.begin(),
                                          body.begin() + static_cast<long>(std::min(
                                                             cfg_.snippet_len, body.size())));
            d.snippet = join(snip);
        }
        d.normalized_url = normalize_url(d.url);
        return spec;
    }

    static std::string join(const std::vector<std::string>& tokens) {
        std::string out;
        for (std::size_t i = 0; i < tokens.size(); ++i) {
            if (i) out += ' ';
            out += tokens[i];
        }
        return out;
    }

    void build_pool() {
        Rng rng = Rng::stream(seed_, "pool");
        pool_.reserve(cfg_.shared_pool_size);
        pool_by_subject_.resize(cfg_.num_subjects);
        for (std::size_t p = 0; p < cfg_.shared_pool_size; ++p) {
            int subject = static_cast<int>(p % cfg_.num_subjects);
            std::string host = "site" + std::to_string(subject) + ".shared.net";
            pool_.push_back(make_doc(subject, host, "p" + std::to_string(p), rng));
            pool_by_subject_[static_cast<std::size_t>(subject)].push_back(p);
            subject_of_url_[pool_.back().doc.normalized_url] = subject;
        }
    }

    void build_collections() {
        Rng srng = Rng::stream(seed_, "subjects");
        coll_subjects_.resize(cfg_.num_collections);
        for (std::size_t i = cfg_.num_wse; i < cfg_.num_collections; ++i) {
            coll_subjects_[i].push_back(static_cast<int>(srng.below(cfg_.num_subjects)));
            if (srng.chance(0.4))
                coll_subjects_[i].push_back(static_cast<int>(srng.below(cfg_.num_subjects)));
        }

        Rng mrng = Rng::stream(seed_, "models");
        ds_.collections.reserve(cfg_.num_collections);
        for (std::size_t i = 0; i < cfg_.num_collections; ++i) {
            Collection c;
            c.id = coll_id(i);
            c.is_wse = i < cfg_.num_wse;
            c.name = (c.is_wse ? "Synthetic Web Engine " : "Synthetic Engine ") +
                     std::to_string(i + 1);
            c.true_size = sizes_[i];
            double mr = mrng.uniform();
            c.retrieval_model = mr < 0.6   ? RetrievalModel::QueryLikelihood
                                : mr < 0.85 ? RetrievalModel::BooleanCoordination
                                            : RetrievalModel::RecencyRandom;
            fill_documents(c, i);
            ds_.collections.push_back(std::move(c));
        }
    }

    void fill_documents(Collection& c, std::size_t idx) {
        Rng rng = Rng::stream(seed_, "docs-" + c.id);
        double overlap = c.is_wse ? cfg_.wse_overlap_rate : cfg_.overlap_rate;
        const std::vector<int>& prefs = coll_subjects_[idx];

        // per-collection shuffled view of the pool so shared picks never repeat
        std::vector<std::vector<std::size_t>> pool_view = pool_by_subject_;
        for (auto& v : pool_view) rng.shuffle(v);
        std::vector<std::size_t> cursor(pool_view.size(), 0);

        auto pick_subject = [&]() -> int {
            if (prefs.empty()) return static_cast<int>(rng.below(cfg_.num_subjects));
            if (prefs.size() == 1 || rng.uniform() < 0.7) return prefs[0];
            return prefs[1];
        };

        const std::uint64_t n = sizes_[idx];
        c.documents.reserve(n);
        std::unordered_set<std::string> used;
        for (std::uint64_t k = 0; k < n; ++k) {
            int subject = pick_subject();
            if (rng.chance(overlap) &&
                cursor[static_cast<std::size_t>(subject)] <
                    pool_view[static_cast<std::size_t>(subject)].size()) {
                std::size_t p = pool_view[static_cast<std::size_t>(subject)]
                                         [cursor[static_cast<std::size_t>(subject)]++];
                c.documents.push_back(pool_[p].doc);
                used.insert(pool_[p].doc.normalized_url);
                continue;
            }
            DocSpec spec =
                make_doc(subject, c.id + ".example.com", "d" + std::to_string(k), rng);
            subject_of_url_[spec.doc.normalized_url] = spec.subject;
            c.documents.push_back(std::move(spec.doc));
        }
    }

    void build_refstats() {
        std::uint64_t total = 0;
        std::unordered_map<std::string, std::uint64_t> df;
        std::unordered_set<std::string> seen;
        for (const auto& c : ds_.collections) {
            for (const auto& d : c.documents) {
                ++total;
                seen.clear();
                for (const auto& t : CollectionEngine::searchable_tokens(d))
                    if (seen.insert(t).second) df[t]++;
            }
        }
        ds_.refstats.total_docs = total;
        ds_.refstats.df.insert(df.begin(), df.end());
    }

    void build_topics() {
        Rng rng = Rng::stream(seed_, "topics");
        ds_.topics.reserve(cfg_.num_topics);
        for (std::size_t t = 0; t < cfg_.num_topics; ++t) {
            Topic topic;
            topic.id = topic_id(t);
            topic.facet_kind =
                rng.chance(cfg_.ambiguous_fraction) ? FacetKind::Ambiguous : FacetKind::Faceted;
            int subject = static_cast<int>(t % cfg_.num_subjects);
            std::vector<std::string> terms;
            const auto& sv = vocab_.subject[static_cast<std::size_t>(subject)];
            terms.push_back(sv[rng.below(std::min<std::size_t>(50, sv.size()))]);
            double r = rng.uniform();
            if (r < 0.7) { // add a mid-frequency global word for broad matching
                std::size_t lo = std::min<std::size_t>(20, cfg_.global_vocab - 1);
                std::size_t hi = std::min<std::size_t>(300, cfg_.global_vocab);
                terms.push_back(vocab_.global[lo + rng.below(hi - lo)]);
            }
            if (r < 0.25) terms.push_back(sv[rng.below(std::min<std::size_t>(50, sv.size()))]);
            topic.query = join(terms);
            ds_.topics.push_back(std::move(topic));
        }
    }

    void build_judgments() {
        // judged result lists: top-N of every engine for every test topic
        std::vector<CollectionEngine> engines;
        engines.reserve(ds_.collections.size());
        for (const auto& c : ds_.collections) engines.emplace_back(c, seed_);

        struct Row {
            std::size_t topic;
            std::size_t coll;
            const Document* doc;
        };
        struct Group {
            double rho = 0.0;
            std::vector<std::size_t> rows;
            double weight = 0.0;
        };
        std::vector<Row> rows;
        std::map<std::pair<std::string, std::string>, Group> groups; // (topic, url)

        for (std::size_t t = 0; t < ds_.topics.size(); ++t) {
            const auto query_tokens = tokenize_stem(ds_.topics[t].query);
            for (std::size_t ci = 0; ci < ds_.collections.size(); ++ci) {
                auto res = engines[ci].search(query_tokens, cfg_.results_per_topic);
                for (std::size_t di : res.doc_indices) {
                    rows.push_back({t, ci, &ds_.collections[ci].documents[di]});
                }
            }
        }
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const Row& row = rows[r];
            auto& g = groups[{ds_.topics[row.topic].id, row.doc->normalized_url}];
            g.rows.push_back(r);
            g.weight += 1.0;
        }

        // relevance propensity: topical match + query coverage + stable noise
        for (auto& [key, g] : groups) {
            const Row& row = rows[g.rows.front()];
            const Topic& topic = ds_.topics[row.topic];
            int topic_subject = static_cast<int>(row.topic % cfg_.num_subjects);
            auto it = subject_of_url_.find(row.doc->normalized_url);
            bool on_subject = it != subject_of_url_.end() && it->second == topic_subject;
            auto qtoks = tokenize_stem(topic.query);
            auto dtoks = CollectionEngine::searchable_tokens(*row.doc);
            std::unordered_set<std::string> dset(dtoks.begin(), dtoks.end());
            std::size_t hit = 0;
            for (const auto& q : qtoks)
                if (dset.count(q)) ++hit;
            double coverage = qtoks.empty() ? 0.0
                                            : static_cast<double>(hit) /
                                                  static_cast<double>(qtoks.size());
            double noise = hash01(seed_, "rel", topic.id, row.doc->normalized_url);
            g.rho = (on_subject ? 2.0 : 0.0) + 1.5 * coverage + 1.2 * noise;
        }

        // weighted quantile assignment calibrates the level marginals to the
        // configured proportions over result rows
        std::vector<std::pair<const std::pair<std::string, std::string>*, Group*>> order;
        order.reserve(groups.size());
        double total_weight = 0.0;
        for (auto& [key, g] : groups) {
            order.emplace_back(&key, &g);
            total_weight += g.weight;
        }
        std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
            if (a.second->rho != b.second->rho) return a.second->rho > b.second->rho;
            return *a.first < *b.first;
        });
        const auto& p = cfg_.level_props;
        // cutoffs from the top: Nav, Key, HRel, Rel, Non
        double c_nav = p[4], c_key = c_nav + p[3], c_hrel = c_key + p[2], c_rel = c_hrel + p[1];
        std::unordered_map<const Group*, RelLevel> level_of;
        double cum = 0.0;
        for (auto& [key, g] : order) {
            double mid = (cum + g->weight / 2.0) / std::max(total_weight, 1.0);
            cum += g->weight;
            RelLevel level = RelLevel::Non;
            if (mid < c_nav)
                level = RelLevel::Nav;
            else if (mid < c_key)
                level = RelLevel::Key;
            else if (mid < c_hrel)
                level = RelLevel::HRel;
            else if (mid < c_rel)
                level = RelLevel::Rel;
            level_of[g] = level;
        }

        // emit rows in deterministic (topic, collection, rank) order
        ds_.judgments.reserve(rows.size());
        for (const Row& row : rows) {
            const Topic& topic = ds_.topics[row.topic];
            const Group& g = groups.at({topic.id, row.doc->normalized_url});
            RelLevel level = level_of.at(&g);
            int jc = 1 + static_cast<int>(
                             hash01(seed_, "judges", topic.id, row.doc->normalized_url) *
                             cfg_.max_judges);
            jc = std::min(jc, cfg_.max_judges);
            double sum = static_cast<double>(level);
            for (int v = 1; v < jc; ++v) {
                double h = hash01(seed_, "vote" + std::to_string(v), topic.id,
                                  row.doc->normalized_url);
                int delta = h < 0.2 ? -1 : (h < 0.8 ? 0 : 1);
                int vote = std::clamp(static_cast<int>(level) + delta, 0, 4);
                sum += vote;
            }
            Judgment j;
            j.topic_id = topic.id;
            j.collection_id = ds_.collections[row.coll].id;
            j.normalized_url = row.doc->normalized_url;
            j.level = level;
            j.judge_count = jc;
            j.mean_level = sum / jc;
            ds_.judgments.push_back(std::move(j));
        }
    }
};

} // namespace

void GeneratorConfig::validate() const {
    require(num_collections >= 1, "generator: num_collections must be >= 1");
    require(num_wse <= num_collections, "generator: num_wse exceeds num_collections");
    require(num_topics >= 1, "generator: num_topics must be >= 1");
    require(num_subjects >= 1, "generator: num_subjects must be >= 1");
    require(global_vocab >= 1 && subject_vocab >= 1, "generator: empty vocabulary");
    require(overlap_rate >= 0.0 && overlap_rate <= 1.0,
            "generator: overlap_rate outside [0,1]");
    require(wse_overlap_rate >= 0.0 && wse_overlap_rate <= 1.0,
            "generator: wse_overlap_rate outside [0,1]");
    require(media_fraction >= 0.0 && media_fraction <= 1.0,
            "generator: media_fraction outside [0,1]");
    require(global_token_fraction + drift_token_fraction <= 1.0,
            "generator: token fractions exceed 1");
    require(min_size >= 1 && max_size >= min_size, "generator: invalid size bounds");
    require(size_log_sigma >= 0.0, "generator: size_log_sigma must be >= 0");
    double s = 0.0;
    for (double v : level_props) {
        require(v >= 0.0, "generator: negative level proportion");
        s += v;
    }
    require(std::abs(s - 1.0) < 1e-6, "generator: level proportions must sum to 1");
    require(max_judges >= 1, "generator: max_judges must be >= 1");
    require(ambiguous_fraction >= 0.0 && ambiguous_fraction <= 1.0,
            "generator: ambiguous_fraction outside [0,1]");
}

Dataset generate_synthetic(const GeneratorConfig& config, std::uint64_t seed) {
    config.validate();
    Generator g(config, seed);
    return g.run();
}

} // namespace fedsel
