#pragma once
#ifndef PATHREACH_REGISTER_METER_HPP
#define PATHREACH_REGISTER_METER_HPP

#include <algorithm>
#include <cstddef>

namespace pathreach {

// Counts index-sized working cells that are live at the same time.
// Read-only input storage and output streams are never charged.
class RegisterMeter {
public:
    void acquire(std::size_t words = 1) noexcept {
        live_ += words;
        peak_ = std::max(peak_, live_);
    }

    void release(std::size_t words = 1) noexcept { live_ -= std::min(words, live_); }

    std::size_t live_words() const noexcept { return live_; }
    std::size_t peak_words() const noexcept { return peak_; }

private:
    std::size_t live_ = 0;
    std::size_t peak_ = 0;
};

// Charges `words` cells to a meter for the lifetime of the guard.
class ScratchWords {
public:
    explicit ScratchWords(RegisterMeter& meter, std::size_t words = 1) noexcept
        : meter_(meter), words_(words) {
        meter_.acquire(words_);
    }
    ~ScratchWords() { meter_.release(words_); }

    ScratchWords(const ScratchWords&) = delete;
    ScratchWords& operator=(const ScratchWords&) = delete;

private:
    RegisterMeter& meter_;
    std::size_t words_;
};

}  // namespace pathreach

#endif  // PATHREACH_REGISTER_METER_HPP
