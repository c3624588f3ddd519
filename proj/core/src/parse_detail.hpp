#pragma once

#include <cstddef>
#include <string_view>

#include "cohere/events.hpp"

namespace cohere::detail {

/// parse_event with error columns shifted by `column_offset`.
Event parse_event_at(std::string_view text, const Context& ctx, std::size_t column_offset);

}  // namespace cohere::detail
