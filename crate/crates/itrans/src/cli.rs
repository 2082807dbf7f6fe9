//! CLI front end (filled in with the identity catalog).
