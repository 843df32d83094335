public class OnceOnly {
    void go(android.os.Vibrator v, long[] pat) {
        v.vibrate(pat, 2);
    }
}
