#include "dyckolab/sequences.hpp"

#include "dyckolab/error.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <optional>

namespace dyckolab {

struct SequenceHandle::Impl {
    std::string name;
    Kind kind;
    unsigned alphabet_size;
    Generator gen;
    std::mutex extend_mutex;
    std::shared_ptr<const Prefix> current = std::make_shared<const Prefix>(Prefix{{}, {0}});
};

SequenceHandle::SequenceHandle(std::string name, Kind kind, unsigned alphabet_size, Generator gen)
    : impl_(std::make_shared<Impl>())
{
    impl_->name = std::move(name);
    impl_->kind = kind;
    impl_->alphabet_size = alphabet_size;
    impl_->gen = std::move(gen);
}

const std::string& SequenceHandle::name() const noexcept { return impl_->name; }
SequenceHandle::Kind SequenceHandle::kind() const noexcept { return impl_->kind; }
unsigned SequenceHandle::alphabet_size() const noexcept { return impl_->alphabet_size; }

std::shared_ptr<const Prefix> SequenceHandle::materialize(std::size_t length) const
{
    std::lock_guard lock(impl_->extend_mutex);
    auto snap = impl_->current;
    if (snap->size() >= length) return snap;

    const std::size_t target = std::max({length, 2 * snap->size(), std::size_t{64}});
    auto next = std::make_shared<Prefix>(*snap);
    next->symbols.reserve(target);
    impl_->gen(snap->size(), target, next->symbols);
    if (next->symbols.size() != target) throw DomainError("sequence generator produced the wrong length");
    next->ones.reserve(target + 1);
    for (std::size_t i = snap->size(); i < target; ++i) {
        if (next->symbols[i] >= impl_->alphabet_size) throw AlphabetError("sequence symbol outside its alphabet");
        next->ones.push_back(next->ones.back() + (next->symbols[i] == 1 ? 1u : 0u));
    }
    impl_->current = next;
    return next;
}

Symbol SequenceHandle::at(std::size_t i) const { return materialize(i + 1)->symbols[i]; }

Word SequenceHandle::prefix(std::size_t length) const { return factor(0, length); }

Word SequenceHandle::factor(std::size_t start, std::size_t length) const
{
    auto snap = materialize(start + length);
    auto first = snap->symbols.begin() + static_cast<std::ptrdiff_t>(start);
    return Word(std::vector<Symbol>(first, first + static_cast<std::ptrdiff_t>(length)), alphabet_size());
}

std::uint64_t SequenceHandle::ones_before(std::size_t n) const { return materialize(n)->ones[n]; }

unsigned thue_morse_at(std::uint64_t i) { return static_cast<unsigned>(std::popcount(i) & 1); }

unsigned rudin_shapiro_at(std::uint64_t i) { return static_cast<unsigned>(std::popcount(i & (i >> 1)) & 1); }

namespace {

SequenceHandle arithmetic(std::string name, unsigned k, std::function<Symbol(std::uint64_t)> fn)
{
    return SequenceHandle(std::move(name), SequenceHandle::Kind::arithmetic, k,
                          [fn = std::move(fn)](std::size_t begin, std::size_t end, std::vector<Symbol>& out) {
                              for (std::size_t i = begin; i < end; ++i) out.push_back(fn(i));
                          });
}

unsigned paperfolding_at(std::uint64_t i)
{
    std::uint64_t m = i + 1;
    m >>= std::countr_zero(m);
    return (m & 3) == 1 ? 0u : 1u;
}

} // namespace

SequenceHandle from_morphism(std::string name, const Morphism& m, Symbol seed, const Morphism* coding)
{
    const unsigned k = coding != nullptr ? coding->target_size() : m.target_size();
    // Copies keep the handle independent of the caller's objects.
    return SequenceHandle(std::move(name), SequenceHandle::Kind::morphic, k,
                          [m, seed, coding = coding ? std::optional<Morphism>(*coding) : std::nullopt](
                              std::size_t begin, std::size_t end, std::vector<Symbol>& out) {
                              const Word fp = m.fixed_point_prefix(seed, end);
                              for (std::size_t i = begin; i < end; ++i)
                                  out.push_back(coding ? coding->image(fp[i])[0] : fp[i]);
                          });
}

SequenceHandle from_dfao(std::string name, const Dfao& d, unsigned alphabet_size)
{
    return SequenceHandle(std::move(name), SequenceHandle::Kind::dfao, alphabet_size,
                          [d](std::size_t begin, std::size_t end, std::vector<Symbol>& out) {
                              for (std::size_t i = begin; i < end; ++i) out.push_back(static_cast<Symbol>(d.eval(i)));
                          });
}

SequenceHandle thue_morse()
{
    static const SequenceHandle h = arithmetic("tm", 2, [](std::uint64_t i) { return static_cast<Symbol>(thue_morse_at(i)); });
    return h;
}

SequenceHandle thue_morse_morphic()
{
    static const SequenceHandle h = from_morphism("tm-morphic", catalog::mu_tm(), 0);
    return h;
}

SequenceHandle rudin_shapiro()
{
    static const SequenceHandle h =
        arithmetic("rs", 2, [](std::uint64_t i) { return static_cast<Symbol>(rudin_shapiro_at(i)); });
    return h;
}

SequenceHandle period_doubling()
{
    static const SequenceHandle h = from_morphism("pd", catalog::pd_morph(), 0);
    return h;
}

SequenceHandle fibonacci_word()
{
    static const SequenceHandle h = from_morphism("fib", catalog::fib_theta(), 0);
    return h;
}

SequenceHandle tern_s_seq()
{
    static const SequenceHandle h = from_morphism("s", catalog::tern_s(), 0);
    return h;
}

SequenceHandle paperfolding(bool complemented)
{
    static const SequenceHandle plain =
        arithmetic("pf", 2, [](std::uint64_t i) { return static_cast<Symbol>(paperfolding_at(i)); });
    static const SequenceHandle flipped =
        arithmetic("pf-complement", 2, [](std::uint64_t i) { return static_cast<Symbol>(paperfolding_at(i) ^ 1u); });
    return complemented ? flipped : plain;
}

std::vector<std::string> sequence_names() { return {"tm", "tm-morphic", "rs", "pd", "fib", "s", "pf", "pf-complement"}; }

SequenceHandle sequence_by_name(const std::string& name)
{
    if (name == "tm") return thue_morse();
    if (name == "tm-morphic") return thue_morse_morphic();
    if (name == "rs") return rudin_shapiro();
    if (name == "pd") return period_doubling();
    if (name == "fib") return fibonacci_word();
    if (name == "s") return tern_s_seq();
    if (name == "pf") return paperfolding(false);
    if (name == "pf-complement") return paperfolding(true);
    throw DomainError("unknown sequence '" + name + "'");
}

const Dfao& thue_morse_dfao()
{
    static const Dfao d = Dfao::from_uniform_morphism(catalog::mu_tm(), 0);
    return d;
}

const Dfao& q_dfao()
{
    static const Dfao d = Dfao::from_uniform_morphism(catalog::aa_q(), 0, &catalog::b_coding());
    return d;
}

int q(std::uint64_t n) { return static_cast<int>(q_dfao().eval(n)); }

std::uint64_t running_sum_tm(std::uint64_t n) { return thue_morse().ones_before(n); }

std::uint64_t running_sum_tm_closed_form(std::uint64_t n)
{
    if (n % 2 == 0) return n / 2;
    return (n - 1) / 2 + thue_morse_at(n - 1);
}

std::int64_t rs_partial_sum(std::uint64_t n)
{
    const auto ones = static_cast<std::int64_t>(rudin_shapiro().ones_before(n + 1));
    return static_cast<std::int64_t>(n + 1) - 2 * ones;
}

} // namespace dyckolab
