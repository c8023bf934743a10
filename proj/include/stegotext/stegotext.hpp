#ifndef STEGOTEXT_STEGOTEXT_HPP
#define STEGOTEXT_STEGOTEXT_HPP

#include "stegotext/bundle.hpp"
#include "stegotext/dictionary.hpp"
#include "stegotext/errors.hpp"
#include "stegotext/formats.hpp"
#include "stegotext/metrics.hpp"
#include "stegotext/missing_letter.hpp"
#include "stegotext/otp.hpp"
#include "stegotext/paragraph.hpp"
#include "stegotext/random.hpp"
#include "stegotext/wordlist.hpp"

#endif
