#pragma once

#define OMITREAD_VERSION "0.1.0"

namespace omitread {
inline const char* version() { return OMITREAD_VERSION; }
}
