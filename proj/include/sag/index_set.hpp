#ifndef SAG_INDEX_SET_HPP
#define SAG_INDEX_SET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace sag {

	// Fixed-width bit vector over job ids 1..capacity.
	class Index_set {
	public:
		Index_set() = default;
		explicit Index_set(std::size_t capacity) : words((capacity + 64) / 64, 0) {}

		bool contains(std::size_t id) const
		{
			const auto w = id / 64;
			return w < words.size() && (words[w] >> (id % 64)) & 1u;
		}

		void add(std::size_t id) { words[id / 64] |= std::uint64_t{1} << (id % 64); }

		Index_set with(std::size_t id) const
		{
			Index_set s = *this;
			s.add(id);
			return s;
		}

		std::size_t size() const
		{
			std::size_t n = 0;
			for (auto w : words)
				n += static_cast<std::size_t>(std::popcount(w));
			return n;
		}

		// Drops storage; used when a level is no longer needed for expansion.
		void release() { std::vector<std::uint64_t>().swap(words); }

		bool released() const { return words.empty(); }

		std::size_t hash() const
		{
			std::size_t h = 0xcbf29ce484222325ull;
			for (auto w : words) {
				h ^= static_cast<std::size_t>(w);
				h *= 0x100000001b3ull;
				h ^= h >> 29;
			}
			return h;
		}

		friend bool operator==(const Index_set&, const Index_set&) = default;

	private:
		std::vector<std::uint64_t> words;
	};

} // namespace sag

template<>
struct std::hash<sag::Index_set> {
	std::size_t operator()(const sag::Index_set& s) const noexcept { return s.hash(); }
};

#endif
