#include "dm/census.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <istream>
#include <mutex>
#include <ostream>
#include <thread>

#include "dm/binary.hpp"

namespace dm {

namespace {

int code_bytes(int n) {
    return ((1 << n) + 7) / 8;
}

std::uint64_t twist_word(std::uint64_t w, unsigned f) {
    std::uint64_t out = 0;
    while (w) {
        const unsigned m = static_cast<unsigned>(std::countr_zero(w));
        w &= w - 1;
        out |= std::uint64_t{1} << (m ^ f);
    }
    return out;
}

// Mask maps for every permutation of [0, n): table[mask] is the permuted
// mask. Built incrementally from the lowest set bit.
std::vector<std::vector<std::uint32_t>> permutation_mask_maps(int n) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[i] = i;
    const std::uint32_t nsub = std::uint32_t{1} << n;
    std::vector<std::vector<std::uint32_t>> maps;
    do {
        std::vector<std::uint32_t> table(nsub, 0);
        for (std::uint32_t m = 1; m < nsub; ++m) {
            const int low = std::countr_zero(m);
            table[m] = table[m & (m - 1)] | (std::uint32_t{1} << perm[low]);
        }
        maps.push_back(std::move(table));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return maps;
}

std::uint64_t permute_word(std::uint64_t w, const std::vector<std::uint32_t>& map) {
    std::uint64_t out = 0;
    while (w) {
        const unsigned m = static_cast<unsigned>(std::countr_zero(w));
        w &= w - 1;
        out |= std::uint64_t{1} << map[m];
    }
    return out;
}

std::uint64_t canonical_family_word(std::uint64_t word,
                                    const std::vector<std::vector<std::uint32_t>>& maps) {
    std::uint64_t best = ~std::uint64_t{0};
    std::uint64_t feasible = word;
    while (feasible) {
        const unsigned f = static_cast<unsigned>(std::countr_zero(feasible));
        feasible &= feasible - 1;
        const std::uint64_t tw = twist_word(word, f);
        for (const auto& map : maps) best = std::min(best, permute_word(tw, map));
    }
    return best;
}

bool word_exchange_ok(std::uint64_t w, int n) {
    const std::uint32_t nsub = std::uint32_t{1} << n;
    for (std::uint32_t x = 0; x < nsub; ++x) {
        if (!((w >> x) & 1)) continue;
        for (std::uint32_t y = 0; y < nsub; ++y) {
            if (!((w >> y) & 1)) continue;
            std::uint32_t pivots = x ^ y;
            while (pivots) {
                const int u = std::countr_zero(pivots);
                pivots &= pivots - 1;
                bool repaired = false;
                std::uint32_t vs = x ^ y;
                while (vs) {
                    const int v = std::countr_zero(vs);
                    vs &= vs - 1;
                    const std::uint32_t flip =
                        (std::uint32_t{1} << u) | (v == u ? 0u : std::uint32_t{1} << v);
                    if ((w >> (x ^ flip)) & 1) {
                        repaired = true;
                        break;
                    }
                }
                if (!repaired) return false;
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------------------
// Pruned depth-first enumeration of normal delta-matroid families.
//
// Masks are decided in descending order, the empty set committed in. Every
// committed pair (X, Y) and pivot u contributes a clause: at least one of
// the repair masks X^{u,v}, v in X^Y, must end up in the family. A clause
// whose repair masks are all committed out kills the branch; committing a
// set can only add clauses for its new pairs, never un-satisfy old ones.
// ---------------------------------------------------------------------------

class ExchangeSearch {
public:
    explicit ExchangeSearch(int n)
        : n_(n), nsub_(std::uint32_t{1} << n), maps_(permutation_mask_maps(n)) {
        build_clause_table();
    }

    // Decision levels handed to the shard prefix; the rest is searched.
    int prefix_len() const {
        return std::min(8, static_cast<int>(nsub_) - 2);
    }

    int shard_count() const { return 1 << prefix_len(); }

    // Explores one shard and returns the canonical words of the classes of
    // every normal family found in it.
    std::set<std::uint64_t> run_shard(int prefix) {
        const int top = static_cast<int>(nsub_) - 1;
        const int low_top = top - prefix_len();  // highest mask left to search
        low_mask_ = (std::uint32_t{1} << (low_top + 1)) - 1;
        seen_.assign(std::size_t{1} << (low_top + 1), false);
        canon_.clear();

        arena_.assign(static_cast<std::size_t>(top + 1) * kSlot, 0);
        std::uint32_t in_word = 1;  // the empty set
        int cnt = 0;
        const std::uint32_t* open = arena_.data();
        for (int j = 0; j < prefix_len(); ++j) {
            const int m = top - j;
            std::uint32_t* dst = slot(m);
            cnt = apply(m, (prefix >> j) & 1, in_word, open, cnt, dst);
            if (cnt < 0) return {};
            open = dst;
        }
        dfs(low_top, in_word, open, cnt);
        return std::move(canon_);
    }

private:
    static constexpr int kSlot = 5200;  // >= C(32,2) pairs * 5 pivots * 2 sides

    std::uint32_t* slot(int m) { return arena_.data() + static_cast<std::size_t>(m) * kSlot; }

    void build_clause_table() {
        clause_.assign(static_cast<std::size_t>(nsub_) * nsub_ * n_, 0);
        clause_cnt_.assign(static_cast<std::size_t>(nsub_) * nsub_, 0);
        for (std::uint32_t a = 0; a < nsub_; ++a) {
            for (std::uint32_t b = 0; b < nsub_; ++b) {
                if (a == b) continue;
                const std::size_t cell = std::size_t{a} * nsub_ + b;
                std::uint32_t pivots = a ^ b;
                int k = 0;
                while (pivots) {
                    const int u = std::countr_zero(pivots);
                    pivots &= pivots - 1;
                    std::uint32_t repairs = 0;
                    std::uint32_t vs = a ^ b;
                    while (vs) {
                        const int v = std::countr_zero(vs);
                        vs &= vs - 1;
                        const std::uint32_t flip =
                            (std::uint32_t{1} << u) |
                            (v == u ? 0u : std::uint32_t{1} << v);
                        repairs |= std::uint32_t{1} << (a ^ flip);
                    }
                    clause_[cell * static_cast<std::size_t>(n_) + k++] = repairs;
                }
                clause_cnt_[cell] = static_cast<std::uint8_t>(k);
            }
        }
    }

    // Filters the open clauses for the decision "mask m in/out" and, when
    // including, appends the clauses of the new pairs. Returns the new open
    // count, or -1 when some clause has no remaining repair.
    int apply(int m, bool include, std::uint32_t& in_word, const std::uint32_t* src,
              int cnt, std::uint32_t* dst) {
        const std::uint32_t undecided = (std::uint32_t{1} << m) - 2;  // bits 1..m-1
        const std::uint32_t in2 =
            include ? (in_word | (std::uint32_t{1} << m)) : in_word;
        int out = 0;
        for (int i = 0; i < cnt; ++i) {
            const std::uint32_t r = src[i];
            if (r & in2) continue;
            if (!(r & undecided)) return -1;
            dst[out++] = r;
        }
        if (include) {
            const std::uint32_t um = static_cast<std::uint32_t>(m);
            std::uint32_t partners = in_word;
            while (partners) {
                const std::uint32_t x =
                    static_cast<std::uint32_t>(std::countr_zero(partners));
                partners &= partners - 1;
                for (const std::size_t cell :
                     {std::size_t{um} * nsub_ + x, std::size_t{x} * nsub_ + um}) {
                    const std::uint32_t* words =
                        clause_.data() + cell * static_cast<std::size_t>(n_);
                    for (int k = 0; k < clause_cnt_[cell]; ++k) {
                        const std::uint32_t r = words[k];
                        if (r & in2) continue;
                        if (!(r & undecided)) return -1;
                        dst[out++] = r;
                    }
                }
            }
            in_word = in2;
        }
        return out;
    }

    void dfs(int m, std::uint32_t in_word, const std::uint32_t* open, int cnt) {
        if (m == 0) {
            record(in_word);
            return;
        }
        std::uint32_t* dst = slot(m);
        for (const bool include : {false, true}) {
            std::uint32_t in2 = in_word;
            const int cnt2 = apply(m, include, in2, open, cnt, dst);
            if (cnt2 >= 0) dfs(m - 1, in2, dst, cnt2);
        }
    }

    void record(std::uint32_t family_word) {
        if (seen_[family_word & low_mask_]) return;
        const std::uint32_t high = family_word & ~low_mask_;
        std::uint64_t best = ~std::uint64_t{0};
        std::uint32_t feasible = family_word;
        while (feasible) {
            const unsigned f = static_cast<unsigned>(std::countr_zero(feasible));
            feasible &= feasible - 1;
            const std::uint64_t tw = twist_word(family_word, f);
            for (const auto& map : maps_) {
                const std::uint64_t pw = permute_word(tw, map);
                if ((static_cast<std::uint32_t>(pw) & ~low_mask_) == high)
                    seen_[static_cast<std::uint32_t>(pw) & low_mask_] = true;
                best = std::min(best, pw);
            }
        }
        canon_.insert(best);
    }

    int n_;
    std::uint32_t nsub_;
    std::vector<std::vector<std::uint32_t>> maps_;
    std::vector<std::uint32_t> clause_;
    std::vector<std::uint8_t> clause_cnt_;

    std::vector<std::uint32_t> arena_;
    std::vector<bool> seen_;
    std::uint32_t low_mask_ = 0;
    std::set<std::uint64_t> canon_;
};

}  // namespace

std::string CanonicalCode::hex() const {
    static const char digits[] = "0123456789abcdef";
    std::string out;
    for (int b = 0; b < code_bytes(n); ++b) {
        const unsigned byte = static_cast<unsigned>(word >> (8 * b)) & 0xffu;
        out += digits[byte >> 4];
        out += digits[byte & 0xf];
    }
    return out;
}

std::string CanonicalCode::str() const {
    return std::to_string(n) + ":" + hex();
}

CanonicalCode canonical_code(const DeltaMatroid& d) {
    const int n = d.ground_size();
    if (n > 6) throw CapacityError("canonical codes support n <= 6");
    const auto maps = permutation_mask_maps(n);
    return CanonicalCode{n, canonical_family_word(d.family().low_word(), maps)};
}

DeltaMatroid decode(const CanonicalCode& code) {
    return DeltaMatroid(FeasibleFamily::from_word(code.n, code.word));
}

namespace census_detail {

std::set<std::uint64_t> canonical_words_brute(int n) {
    if (n < 1 || n > 4) throw CapacityError("exhaustive census scan supports n <= 4");
    const auto maps = permutation_mask_maps(n);
    std::set<std::uint64_t> out;
    const std::uint64_t families = std::uint64_t{1} << ((1 << n) - 1);
    for (std::uint64_t half = 0; half < families; ++half) {
        const std::uint64_t w = (half << 1) | 1;  // normal representatives only
        if (!word_exchange_ok(w, n)) continue;
        out.insert(canonical_family_word(w, maps));
    }
    return out;
}

std::set<std::uint64_t> canonical_words_search(int n, int jobs) {
    if (n < 2 || n > 5) throw CapacityError("pruned census search supports 2 <= n <= 5");
    if (jobs <= 0)
        jobs = std::max(1u, std::thread::hardware_concurrency());
    ExchangeSearch prototype(n);
    const int shards = prototype.shard_count();
    jobs = std::min(jobs, shards);

    std::set<std::uint64_t> out;
    std::mutex out_mutex;
    std::atomic<int> next{0};
    auto worker = [&]() {
        ExchangeSearch search(n);
        for (;;) {
            const int shard = next.fetch_add(1);
            if (shard >= shards) break;
            std::set<std::uint64_t> local = search.run_shard(shard);
            if (local.empty()) continue;
            const std::lock_guard<std::mutex> lock(out_mutex);
            out.merge(local);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(jobs));
        for (int i = 0; i < jobs; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    return out;
}

}  // namespace census_detail

std::vector<CensusRecord> enumerate_classes(int n, int jobs) {
    if (n < 1 || n > 5)
        throw CapacityError("census enumeration supports 1 <= n <= 5");
    const std::set<std::uint64_t> words =
        n <= 4 ? census_detail::canonical_words_brute(n)
               : census_detail::canonical_words_search(n, jobs);
    std::vector<CensusRecord> records;
    records.reserve(words.size());
    for (const std::uint64_t w : words) {
        CensusRecord rec;
        rec.code = CanonicalCode{n, w};
        const DeltaMatroid d = decode(rec.code);
        rec.family_size = static_cast<int>(d.family().count());
        rec.width = width(d);
        rec.binary = is_binary_matrix_method(d).has_value();
        rec.twist_poly = twist_polynomial(d);
        rec.monomial = rec.twist_poly.is_monomial();
        records.push_back(std::move(rec));
    }
    return records;
}

void write_catalog(const std::vector<CensusRecord>& records, std::ostream& out) {
    const int n = records.empty() ? 0 : records.front().code.n;
    out << "dm-census v1 n=" << n << "\n";
    for (const CensusRecord& rec : records) {
        out << rec.code.str() << " |F|=" << rec.family_size << " w=" << rec.width
            << " binary=" << (rec.binary ? 1 : 0)
            << " monomial=" << (rec.monomial ? 1 : 0)
            << " poly=" << to_string(rec.twist_poly) << "\n";
    }
}

namespace {

int parse_int_field(std::string_view text, std::string_view key, int line_no) {
    if (text.substr(0, key.size()) != key)
        throw MalformedLineError(line_no,
                                 "expected field '" + std::string(key) + "'");
    const std::string_view value = text.substr(key.size());
    int out = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        throw MalformedLineError(line_no, "bad integer in field '" + std::string(key) + "'");
    return out;
}

std::string_view next_token(std::string_view& rest) {
    const std::size_t space = rest.find(' ');
    const std::string_view tok = rest.substr(0, space);
    rest = space == std::string_view::npos ? std::string_view{} : rest.substr(space + 1);
    return tok;
}

int hex_digit(char c, int line_no) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    throw MalformedLineError(line_no, "bad hex digit in code");
}

}  // namespace

std::vector<CensusRecord> read_catalog(std::istream& in) {
    std::string line;
    int line_no = 1;
    if (!std::getline(in, line))
        throw MalformedLineError(1, "missing header");
    if (line.rfind("dm-census v1 n=", 0) != 0)
        throw MalformedLineError(1, "bad header, expected 'dm-census v1 n=<n>'");
    const int n = parse_int_field(line, "dm-census v1 n=", 1);
    if (n < 0 || n > 6)
        throw MalformedLineError(1, "header ground-set size out of range");

    std::vector<CensusRecord> records;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) throw MalformedLineError(line_no, "empty line");
        std::string_view rest = line;

        const std::string_view code_tok = next_token(rest);
        const std::size_t colon = code_tok.find(':');
        if (colon == std::string_view::npos)
            throw MalformedLineError(line_no, "code is missing ':'");
        int code_n = 0;
        {
            const auto num = code_tok.substr(0, colon);
            const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), code_n);
            if (ec != std::errc{} || ptr != num.data() + num.size())
                throw MalformedLineError(line_no, "bad ground-set size in code");
        }
        if (code_n != n)
            throw MalformedLineError(line_no, "code ground-set size differs from header");
        const std::string_view hex = code_tok.substr(colon + 1);
        if (static_cast<int>(hex.size()) != 2 * code_bytes(n))
            throw MalformedLineError(line_no, "code has wrong hex length");
        std::uint64_t word = 0;
        for (int b = 0; b < code_bytes(n); ++b) {
            const int hi = hex_digit(hex[static_cast<std::size_t>(2 * b)], line_no);
            const int lo = hex_digit(hex[static_cast<std::size_t>(2 * b) + 1], line_no);
            word |= std::uint64_t((hi << 4) | lo) << (8 * b);
        }
        if (n < 3 && (word >> (std::uint64_t{1} << n)) != 0)
            throw MalformedLineError(line_no, "family bit beyond 2^n");
        if (word == 0) throw MalformedLineError(line_no, "empty family");
        if (!(word & 1)) throw MalformedLineError(line_no, "family is not normal");
        if (!word_exchange_ok(word, n))
            throw MalformedLineError(line_no, "family fails symmetric exchange");

        CensusRecord rec;
        rec.code = CanonicalCode{n, word};
        rec.family_size = parse_int_field(next_token(rest), "|F|=", line_no);
        rec.width = parse_int_field(next_token(rest), "w=", line_no);
        const int binary = parse_int_field(next_token(rest), "binary=", line_no);
        const int monomial = parse_int_field(next_token(rest), "monomial=", line_no);
        if ((binary | 1) != 1 || (monomial | 1) != 1)
            throw MalformedLineError(line_no, "flags must be 0 or 1");
        rec.binary = binary != 0;
        rec.monomial = monomial != 0;
        if (rec.family_size != static_cast<int>(std::popcount(word)))
            throw MalformedLineError(line_no, "family size does not match code");
        if (rest.substr(0, 5) != "poly=")
            throw MalformedLineError(line_no, "expected field 'poly='");
        try {
            rec.twist_poly = parse_polynomial(std::string(rest.substr(5)));
        } catch (const Error& e) {
            throw MalformedLineError(line_no, e.what());
        }
        records.push_back(std::move(rec));
    }
    return records;
}

}  // namespace dm
