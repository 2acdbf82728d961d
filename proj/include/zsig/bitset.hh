#ifndef ZSIG_BITSET_HH
#define ZSIG_BITSET_HH

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace zsig
{
    /**
     * Runtime-sized bitset used for adjacency rows and vertex sets. All
     * binary operations assume both operands have the same size.
     */
    class Bitset
    {
        private:
            using Word = std::uint64_t;
            static constexpr int bits_per_word = 64;

            int _size = 0;
            std::vector<Word> _words;

        public:
            Bitset() = default;

            explicit Bitset(int size) :
                _size(size),
                _words((size + bits_per_word - 1) / bits_per_word, 0)
            {
            }

            auto size() const -> int
            {
                return _size;
            }

            auto set(int i) -> void
            {
                _words[i / bits_per_word] |= Word{1} << (i % bits_per_word);
            }

            auto reset(int i) -> void
            {
                _words[i / bits_per_word] &= ~(Word{1} << (i % bits_per_word));
            }

            auto test(int i) const -> bool
            {
                return (_words[i / bits_per_word] >> (i % bits_per_word)) & 1;
            }

            auto count() const -> int
            {
                int result = 0;
                for (auto w : _words)
                    result += std::popcount(w);
                return result;
            }

            auto any() const -> bool
            {
                for (auto w : _words)
                    if (w)
                        return true;
                return false;
            }

            auto none() const -> bool
            {
                return ! any();
            }

            auto intersects(const Bitset & other) const -> bool
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    if (_words[i] & other._words[i])
                        return true;
                return false;
            }

            auto is_subset_of(const Bitset & other) const -> bool
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    if (_words[i] & ~other._words[i])
                        return false;
                return true;
            }

            auto intersect_with(const Bitset & other) -> void
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    _words[i] &= other._words[i];
            }

            auto union_with(const Bitset & other) -> void
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    _words[i] |= other._words[i];
            }

            /// Lowest set index, or -1.
            auto first_set() const -> int
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i)
                    if (_words[i])
                        return int(i) * bits_per_word + std::countr_zero(_words[i]);
                return -1;
            }

            template <typename F_>
            auto for_each_set(F_ && f) const -> void
            {
                for (std::size_t i = 0 ; i < _words.size() ; ++i) {
                    Word w = _words[i];
                    while (w) {
                        int b = std::countr_zero(w);
                        f(int(i) * bits_per_word + b);
                        w &= w - 1;
                    }
                }
            }

            auto operator== (const Bitset &) const -> bool = default;
    };
}

#endif
