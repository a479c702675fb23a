#include "locver/language.hpp"

// Language is a plain aggregate; instances live in the zoo.
