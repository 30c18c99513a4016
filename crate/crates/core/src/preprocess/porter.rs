//! Porter's 1980 suffix-stripping algorithm.
//!
//! A faithful port of the classic five-step algorithm as published, without
//! the later revisions some implementations adopt (step 2 maps `abli` to
//! `able` and has no `logi` rule). Words of one or two letters, and words
//! containing anything other than lowercase ASCII letters, pass through
//! unchanged.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

/// Stems a lowercase English word.
pub fn porter_stem(word: &str) -> String {
    if word.len() <= 2 || !word.bytes().all(|b| b.is_ascii_lowercase()) {
        return word.to_string();
    }
    let mut stemmer = Stemmer {
        k: word.len() as isize - 1,
        j: 0,
        b: word.as_bytes().to_vec(),
    };
    stemmer.run();
    let end = (stemmer.k + 1) as usize;
    String::from_utf8(stemmer.b[..end].to_vec()).expect("ASCII stays valid UTF-8")
}

/// Working buffer plus the two cursors of the reference implementation:
/// `k` marks the end of the current word, `j` the end of the stem left by
/// the most recent suffix match.
struct Stemmer {
    b: Vec<u8>,
    k: isize,
    j: isize,
}

impl Stemmer {
    fn run(&mut self) {
        self.step1ab();
        self.step1c();
        self.step2();
        self.step3();
        self.step4();
        self.step5();
    }

    fn at(&self, i: isize) -> u8 {
        self.b[i as usize]
    }

    fn cons(&self, i: isize) -> bool {
        match self.at(i) {
            b'a' | b'e' | b'i' | b'o' | b'u' => false,
            b'y' => i == 0 || !self.cons(i - 1),
            _ => true,
        }
    }

    /// Number of vowel-consonant sequences in `b[0..=j]`.
    fn measure(&self) -> usize {
        let mut n = 0;
        let mut i = 0;
        loop {
            if i > self.j {
                return n;
            }
            if !self.cons(i) {
                break;
            }
            i += 1;
        }
        i += 1;
        loop {
            loop {
                if i > self.j {
                    return n;
                }
                if self.cons(i) {
                    break;
                }
                i += 1;
            }
            i += 1;
            n += 1;
            loop {
                if i > self.j {
                    return n;
                }
                if !self.cons(i) {
                    break;
                }
                i += 1;
            }
            i += 1;
        }
    }

    fn vowel_in_stem(&self) -> bool {
        (0..=self.j).any(|i| !self.cons(i))
    }

    fn double_consonant(&self, i: isize) -> bool {
        i >= 1 && self.at(i) == self.at(i - 1) && self.cons(i)
    }

    /// consonant-vowel-consonant ending at `i`, where the final consonant
    /// is not w, x, or y; marks a short stem like "hop" or "crim".
    fn cvc(&self, i: isize) -> bool {
        if i < 2 || !self.cons(i) || self.cons(i - 1) || !self.cons(i - 2) {
            return false;
        }
        !matches!(self.at(i), b'w' | b'x' | b'y')
    }

    /// True when the word ends with `s`; on a match, `j` is set to the
    /// last index of the remaining stem.
    fn ends(&mut self, s: &[u8]) -> bool {
        let len = s.len() as isize;
        if len > self.k + 1 {
            return false;
        }
        let start = (self.k + 1 - len) as usize;
        if &self.b[start..=(self.k as usize)] != s {
            return false;
        }
        self.j = self.k - len;
        true
    }

    /// Replaces everything after the stem with `s`.
    fn set_to(&mut self, s: &[u8]) {
        self.b.truncate((self.j + 1) as usize);
        self.b.extend_from_slice(s);
        self.k = self.j + s.len() as isize;
    }

    fn replace_if_measure(&mut self, s: &[u8]) {
        if self.measure() > 0 {
            self.set_to(s);
        }
    }

    /// Plurals and -ed / -ing.
    fn step1ab(&mut self) {
        if self.at(self.k) == b's' {
            if self.ends(b"sses") {
                self.k -= 2;
            } else if self.ends(b"ies") {
                self.set_to(b"i");
            } else if self.at(self.k - 1) != b's' {
                self.k -= 1;
            }
        }
        if self.ends(b"eed") {
            if self.measure() > 0 {
                self.k -= 1;
            }
        } else if (self.ends(b"ed") || self.ends(b"ing")) && self.vowel_in_stem() {
            self.k = self.j;
            if self.ends(b"at") {
                self.set_to(b"ate");
            } else if self.ends(b"bl") {
                self.set_to(b"ble");
            } else if self.ends(b"iz") {
                self.set_to(b"ize");
            } else if self.double_consonant(self.k) {
                self.k -= 1;
                if matches!(self.at(self.k), b'l' | b's' | b'z') {
                    self.k += 1;
                }
            } else if self.measure() == 1 && self.cvc(self.k) {
                self.set_to(b"e");
            }
        }
    }

    /// Turns terminal y to i when there is another vowel in the stem.
    fn step1c(&mut self) {
        if self.ends(b"y") && self.vowel_in_stem() {
            self.b[self.k as usize] = b'i';
        }
    }

    /// Maps double suffixes to single ones (m > 0).
    fn step2(&mut self) {
        if self.k < 1 {
            return;
        }
        match self.at(self.k - 1) {
            b'a' => {
                if self.ends(b"ational") {
                    self.replace_if_measure(b"ate");
                } else if self.ends(b"tional") {
                    self.replace_if_measure(b"tion");
                }
            }
            b'c' => {
                if self.ends(b"enci") {
                    self.replace_if_measure(b"ence");
                } else if self.ends(b"anci") {
                    self.replace_if_measure(b"ance");
                }
            }
            b'e' => {
                if self.ends(b"izer") {
                    self.replace_if_measure(b"ize");
                }
            }
            b'l' => {
                if self.ends(b"abli") {
                    self.replace_if_measure(b"able");
                } else if self.ends(b"alli") {
                    self.replace_if_measure(b"al");
                } else if self.ends(b"entli") {
                    self.replace_if_measure(b"ent");
                } else if self.ends(b"eli") {
                    self.replace_if_measure(b"e");
                } else if self.ends(b"ousli") {
                    self.replace_if_measure(b"ous");
                }
            }
            b'o' => {
                if self.ends(b"ization") {
                    self.replace_if_measure(b"ize");
                } else if self.ends(b"ation") {
                    self.replace_if_measure(b"ate");
                } else if self.ends(b"ator") {
                    self.replace_if_measure(b"ate");
                }
            }
            b's' => {
                if self.ends(b"alism") {
                    self.replace_if_measure(b"al");
                } else if self.ends(b"iveness") {
                    self.replace_if_measure(b"ive");
                } else if self.ends(b"fulness") {
                    self.replace_if_measure(b"ful");
                } else if self.ends(b"ousness") {
                    self.replace_if_measure(b"ous");
                }
            }
            b't' => {
                if self.ends(b"aliti") {
                    self.replace_if_measure(b"al");
                } else if self.ends(b"iviti") {
                    self.replace_if_measure(b"ive");
                } else if self.ends(b"biliti") {
                    self.replace_if_measure(b"ble");
                }
            }
            _ => {}
        }
    }

    /// -ic-, -full, -ness and similar (m > 0).
    fn step3(&mut self) {
        match self.at(self.k) {
            b'e' => {
                if self.ends(b"icate") {
                    self.replace_if_measure(b"ic");
                } else if self.ends(b"ative") {
                    self.replace_if_measure(b"");
                } else if self.ends(b"alize") {
                    self.replace_if_measure(b"al");
                }
            }
            b'i' => {
                if self.ends(b"iciti") {
                    self.replace_if_measure(b"ic");
                }
            }
            b'l' => {
                if self.ends(b"ical") {
                    self.replace_if_measure(b"ic");
                } else if self.ends(b"ful") {
                    self.replace_if_measure(b"");
                }
            }
            b's' => {
                if self.ends(b"ness") {
                    self.replace_if_measure(b"");
                }
            }
            _ => {}
        }
    }

    /// Drops -ant, -ence and similar in longer stems (m > 1).
    fn step4(&mut self) {
        if self.k < 1 {
            return;
        }
        let matched = match self.at(self.k - 1) {
            b'a' => self.ends(b"al"),
            b'c' => self.ends(b"ance") || self.ends(b"ence"),
            b'e' => self.ends(b"er"),
            b'i' => self.ends(b"ic"),
            b'l' => self.ends(b"able") || self.ends(b"ible"),
            b'n' => {
                self.ends(b"ant")
                    || self.ends(b"ement")
                    || self.ends(b"ment")
                    || self.ends(b"ent")
            }
            b'o' => {
                (self.ends(b"ion") && self.j >= 0 && matches!(self.at(self.j), b's' | b't'))
                    || self.ends(b"ou")
            }
            b's' => self.ends(b"ism"),
            b't' => self.ends(b"ate") || self.ends(b"iti"),
            b'u' => self.ends(b"ous"),
            b'v' => self.ends(b"ive"),
            b'z' => self.ends(b"ize"),
            _ => false,
        };
        if matched && self.measure() > 1 {
            self.k = self.j;
        }
    }

    /// Removes a final -e and collapses a final double l (m > 1).
    fn step5(&mut self) {
        self.j = self.k;
        if self.at(self.k) == b'e' {
            let m = self.measure();
            if m > 1 || (m == 1 && !self.cvc(self.k - 1)) {
                self.k -= 1;
            }
        }
        if self.at(self.k) == b'l' && self.double_consonant(self.k) && self.measure() > 1 {
            self.k -= 1;
        }
    }
}
