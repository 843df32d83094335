public class Busy {
    void go(android.os.Vibrator v, int n) {
        v.vibrate(getPat(), n + 1);
    }

    static long[] getPat() {
        return new long[]{0, 100};
    }
}
